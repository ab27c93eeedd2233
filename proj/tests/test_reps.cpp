#include <doctest.h>

#include <cmath>

#include "qstar/reps.hpp"

using namespace qstar;

namespace {

SeriesMatrix rep(HalfInt j, Generator g, int order = 6) {
  return irrep_generator(j, g, is_deformed(g), order).matrix;
}

SeriesMatrix tensor_rep(HalfInt j1, HalfInt j2, Generator g, int order = 6) {
  return coproduct_rep(j1, j2, g, is_deformed(g), order).matrix;
}

const std::vector<HalfInt> kSpins{HalfInt(0), half(1), HalfInt(1), half(3), HalfInt(2), half(5)};

}  // namespace

TEST_CASE("irrep generator examples") {
  CHECK(rep(HalfInt(0), Generator::E).max_abs() == 0.0);
  CHECK(rep(HalfInt(0), Generator::E).rows() == 1);

  const SeriesMatrix K = rep(half(1), Generator::K);
  CHECK(max_abs_diff(K.entry(0, 0), q_power(-1.0, 6)) < 1e-15);
  CHECK(max_abs_diff(K.entry(1, 1), q_power(1.0, 6)) < 1e-15);
  CHECK(K.entry(0, 1).is_zero());

  const SeriesMatrix e = rep(half(1), Generator::e);
  CHECK(e.entry(1, 0)[0] == 1.0);
  CHECK(e.constant_term().cwiseAbs().sum() == 1.0);

  const SeriesMatrix h = rep(HalfInt(1), Generator::h);
  CHECK(h.entry(0, 0)[0] == -2.0);
  CHECK(h.entry(2, 2)[0] == 2.0);
}

TEST_CASE("matrix entries match the sinh form of the q-integers") {
  const double x = 0.003;
  for (HalfInt j : kSpins) {
    const SeriesMatrix E = rep(j, Generator::E, 8), F = rep(j, Generator::F, 8);
    const auto ms = weights(j);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      const double m = ms[i].value(), jj = j.value();
      const double expected =
          std::sqrt(std::sinh((jj - m) * x) * std::sinh((jj + m + 1) * x)) / std::sinh(x);
      CHECK(E.entry(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)).evaluate(x) ==
            doctest::Approx(expected).epsilon(1e-12));
      CHECK(F.entry(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)).evaluate(x) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("deformed relations on every irrep") {
  for (HalfInt j : kSpins) CHECK(verify_irrep_relations(j, 6) < 1e-10);
  CHECK(verify_irrep_relations(HalfInt(0), 6) == 0.0);
}

TEST_CASE("weight structure") {
  for (HalfInt j : kSpins) {
    const SeriesMatrix E = rep(j, Generator::E), F = rep(j, Generator::F), K = rep(j, Generator::K);
    const Eigen::Index n = E.rows();
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        if (r != c + 1) CHECK(E.entry(r, c).is_zero());
        if (r + 1 != c) CHECK(F.entry(r, c).is_zero());
        if (r != c) CHECK(K.entry(r, c).is_zero());
      }
    const SeriesMatrix EF = E * F + F * E;
    CHECK(max_abs_diff(EF * K, K * EF) < 1e-10);
  }
}

TEST_CASE("classical limits of the deformed generators") {
  for (HalfInt j : kSpins) {
    CHECK((rep(j, Generator::E).constant_term() - rep(j, Generator::e).constant_term()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rep(j, Generator::F).constant_term() - rep(j, Generator::f).constant_term()).cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::MatrixXd K0 = rep(j, Generator::K).constant_term();
    CHECK((K0 - Eigen::MatrixXd::Identity(K0.rows(), K0.cols())).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("mixed families are rejected") {
  try {
    irrep_generator(half(1), Generator::E, false);
    FAIL("expected MixedFamily");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFamily);
  }
  CHECK_THROWS_AS(coproduct_rep(half(1), half(1), Generator::h, true), Error);
}

TEST_CASE("coproduct of K is the Kronecker product of diagonals") {
  for (HalfInt j1 : {half(1), HalfInt(1)})
    for (HalfInt j2 : {HalfInt(0), half(3)}) {
      const SeriesMatrix D = tensor_rep(j1, j2, Generator::K);
      std::vector<HSeries> diag;
      for (HalfInt m1 : weights(j1))
        for (HalfInt m2 : weights(j2)) diag.push_back(q_power(2.0 * (m1 + m2).value(), 6));
      CHECK(max_abs_diff(D, diagonal(diag)) < 1e-14);
    }
}

TEST_CASE("undeformed coproduct is the Leibniz rule") {
  const SeriesMatrix D = tensor_rep(half(1), half(1), Generator::e);
  const Eigen::MatrixXd c = D.constant_term();
  // e(x)1 + 1(x)e on the ordered basis (--, -+, +-, ++)
  CHECK(c(1, 0) == 1.0);
  CHECK(c(2, 0) == 1.0);
  CHECK(c(3, 1) == 1.0);
  CHECK(c(3, 2) == 1.0);
  CHECK((c.array() != 0.0).count() == 4);
}

TEST_CASE("classical limit of the deformed coproduct") {
  for (HalfInt j1 : {half(1), HalfInt(1)})
    for (HalfInt j2 : {half(1), half(3)}) {
      CHECK((tensor_rep(j1, j2, Generator::E).constant_term() - tensor_rep(j1, j2, Generator::e).constant_term())
                .cwiseAbs()
                .maxCoeff() < 1e-14);
      CHECK((tensor_rep(j1, j2, Generator::F).constant_term() - tensor_rep(j1, j2, Generator::f).constant_term())
                .cwiseAbs()
                .maxCoeff() < 1e-14);
    }
}

TEST_CASE("coproduct respects the algebra relations") {
  const HSeries qd = q_power(1.0, 6) - q_power(-1.0, 6);
  const HSeries q2 = q_power(2.0, 6);
  for (HalfInt j1 : {half(1), HalfInt(1), half(3)})
    for (HalfInt j2 : {HalfInt(0), half(1), HalfInt(1)}) {
      const SeriesMatrix E = tensor_rep(j1, j2, Generator::E), F = tensor_rep(j1, j2, Generator::F);
      const SeriesMatrix K = tensor_rep(j1, j2, Generator::K), Ki = tensor_rep(j1, j2, Generator::Kinv);
      CHECK(max_abs_diff(K * Ki, SeriesMatrix::identity(K.rows(), 6)) < 1e-12);
      CHECK(max_abs_diff(qd * (E * F - F * E), K - Ki) < 1e-10);
      CHECK(max_abs_diff(K * E * Ki, q2 * E) < 1e-10);
      CHECK(max_abs_diff(K * F, q_power(-2.0, 6) * (F * K)) < 1e-10);
    }
}

TEST_CASE("opposite coproduct swaps the legs") {
  const HalfInt j1 = half(1), j2 = HalfInt(1);
  const SeriesMatrix D = coproduct_rep(j1, j2, Generator::E, true).matrix;
  const SeriesMatrix Dop = coproduct_op_rep(j2, j1, Generator::E, true).matrix;
  // flip permutation between V_j1 (x) V_j2 and V_j2 (x) V_j1
  const int d1 = dim(j1), d2 = dim(j2);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(d1 * d2, d1 * d2);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) P(b * d1 + a, a * d2 + b) = 1.0;
  const SeriesMatrix Ps(P, 6);
  CHECK(max_abs_diff(Ps * D * Ps.transpose(), Dop) < 1e-14);
}

TEST_CASE("generator names") {
  for (Generator g : {Generator::E, Generator::F, Generator::K, Generator::Kinv, Generator::e, Generator::f,
                      Generator::h})
    CHECK(parse_generator(to_string(g)) == g);
  CHECK_THROWS_AS(parse_generator("G"), Error);
}
