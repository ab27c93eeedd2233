#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <thread>

#include "qstar/cgc.hpp"

using namespace qstar;

namespace {

// Coupled vectors |j m> in V_j1 (x) V_j2 built from scratch in double precision at
// a numeric hbar (0 for the classical case): the highest weight vector is the
// kernel of D(E) on the weight-j subspace, fixed by <j1 j1; j2 j-j1 | j j> > 0,
// and lower weights follow from D(F) |j m> = sqrt([j+m][j-m+1]) |j m-1>.
struct Oracle {
  double h;
  double qint(double n) const { return h == 0.0 ? n : std::sinh(n * h) / std::sinh(h); }

  Eigen::MatrixXd raise(double j) const {
    const int d = static_cast<int>(std::lround(2 * j)) + 1;
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) {
      const double m = -j + i;
      E(i + 1, i) = std::sqrt(qint(j - m) * qint(j + m + 1));
    }
    return E;
  }
  Eigen::MatrixXd half_cartan(double j, double sign) const {
    const int d = static_cast<int>(std::lround(2 * j)) + 1;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) K(i, i) = std::exp(sign * h * (-j + i));
    return K;
  }
  static Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
  }
  // E (x) K^{1/2} + K^{-1/2} (x) E, and F likewise.
  Eigen::MatrixXd delta(double j1, double j2, bool lower) const {
    Eigen::MatrixXd E1 = raise(j1), E2 = raise(j2);
    if (lower) {
      E1.transposeInPlace();
      E2.transposeInPlace();
    }
    return kron(E1, half_cartan(j2, 1)) + kron(half_cartan(j1, -1), E2);
  }

  // Column |j m> for m = -j..j, as a (d1 d2) x (2j+1) matrix.
  Eigen::MatrixXd coupled(double j1, double j2, double j) const {
    const int d1 = static_cast<int>(std::lround(2 * j1)) + 1, d2 = static_cast<int>(std::lround(2 * j2)) + 1;
    std::vector<int> top;
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d2; ++b)
        if (std::abs((-j1 + a) + (-j2 + b) - j) < 1e-9) top.push_back(a * d2 + b);
    const Eigen::MatrixXd DE = delta(j1, j2, false);
    Eigen::MatrixXd restricted(DE.rows(), static_cast<Eigen::Index>(top.size()));
    for (std::size_t k = 0; k < top.size(); ++k) restricted.col(static_cast<Eigen::Index>(k)) = DE.col(top[k]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted, Eigen::ComputeFullV);
    const Eigen::VectorXd kernel = svd.matrixV().col(svd.matrixV().cols() - 1);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d1 * d2);
    for (std::size_t k = 0; k < top.size(); ++k) v(top[k]) = kernel(static_cast<Eigen::Index>(k));
    const int a_top = d1 - 1;
    const int b_top = static_cast<int>(std::lround(j - j1 + j2));
    if (v(a_top * d2 + b_top) < 0) v = -v;
    v.normalize();

    const int dj = static_cast<int>(std::lround(2 * j)) + 1;
    Eigen::MatrixXd out(d1 * d2, dj);
    out.col(dj - 1) = v;
    const Eigen::MatrixXd DF = delta(j1, j2, true);
    for (int i = dj - 1; i > 0; --i) {
      const double m = -j + i;
      out.col(i - 1) = DF * out.col(i) / std::sqrt(qint(j + m) * qint(j - m + 1));
    }
    return out;
  }
};

std::vector<HalfInt> spins_to(int twice_max) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= twice_max; ++t) out.push_back(half(t));
  return out;
}

}  // namespace

TEST_CASE("classical CG examples") {
  CHECK(cg({half(1), half(1), HalfInt(1), half(1), half(1), HalfInt(1)}) == doctest::Approx(1.0));
  CHECK(cg({half(1), half(1), HalfInt(0), half(1), half(-1), HalfInt(0)}) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(cg({half(1), half(1), HalfInt(0), half(-1), half(1), HalfInt(0)}) == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(cg({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(2)}) == 0.0);
}

TEST_CASE("selection rules and malformed queries") {
  CHECK_FALSE(cg_allowed({HalfInt(1), HalfInt(1), HalfInt(3), HalfInt(0), HalfInt(0), HalfInt(0)}));
  CHECK_FALSE(cg_allowed({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)}));
  CHECK_FALSE(cg_allowed({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(2)}));
  CHECK(qcg({half(1), half(1), HalfInt(1), half(3), half(-1), HalfInt(1)}).is_zero());
  CHECK(qcg({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)}).is_zero());
  for (const CGQuery& bad : {CGQuery{half(-1), half(1), HalfInt(0), half(1), half(-1), HalfInt(0)},
                             CGQuery{half(1), half(1), HalfInt(1), HalfInt(1), half(-1), half(1)},
                             CGQuery{half(1), half(1), HalfInt(1), HalfInt(0), half(1), half(1)}}) {
    try {
      qcg(bad);
      FAIL("expected InvalidQuery");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidQuery);
    }
  }
}

TEST_CASE("q-CG examples") {
  CHECK(max_abs_diff(qcg({half(1), half(1), HalfInt(1), half(1), half(1), HalfInt(1)}), HSeries::constant(1.0)) < 1e-15);
  CHECK(qcg({half(1), half(1), HalfInt(0), half(1), half(-1), HalfInt(0)})[0] ==
        doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("classical coefficients agree with the highest-weight construction") {
  const Oracle oracle{0.0};
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4))
      for (HalfInt j : coupled_spins(j1, j2)) {
        const Eigen::MatrixXd cols = oracle.coupled(j1.value(), j2.value(), j.value());
        const auto w1 = weights(j1), w2 = weights(j2), wj = weights(j);
        for (std::size_t a = 0; a < w1.size(); ++a)
          for (std::size_t b = 0; b < w2.size(); ++b)
            for (std::size_t c = 0; c < wj.size(); ++c) {
              const double expected = cols(static_cast<Eigen::Index>(a * w2.size() + b), static_cast<Eigen::Index>(c));
              CHECK(cg({j1, j2, j, w1[a], w2[b], wj[c]}) == doctest::Approx(expected).epsilon(1e-10).scale(1.0));
            }
      }
}

TEST_CASE("q-deformed coefficients agree with the highest-weight construction") {
  const double h = 0.002;
  const Oracle oracle{h};
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3))
      for (HalfInt j : coupled_spins(j1, j2)) {
        const Eigen::MatrixXd cols = oracle.coupled(j1.value(), j2.value(), j.value());
        const auto w1 = weights(j1), w2 = weights(j2), wj = weights(j);
        for (std::size_t a = 0; a < w1.size(); ++a)
          for (std::size_t b = 0; b < w2.size(); ++b)
            for (std::size_t c = 0; c < wj.size(); ++c) {
              const double expected = cols(static_cast<Eigen::Index>(a * w2.size() + b), static_cast<Eigen::Index>(c));
              const double got = qcg({j1, j2, j, w1[a], w2[b], wj[c]}, 8).evaluate(h);
              CHECK(std::abs(got - expected) < 1e-9);
            }
      }
}

TEST_CASE("orthogonality of both coupling matrices") {
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4))
      for (bool deformed : {false, true}) {
        const SeriesMatrix C = cg_matrix(j1, j2, deformed, 6).matrix;
        CHECK(max_abs_diff(C.transpose() * C, SeriesMatrix::identity(C.cols(), 6)) < 1e-9);
        CHECK(max_abs_diff(C * C.transpose(), SeriesMatrix::identity(C.rows(), 6)) < 1e-9);
      }
}

TEST_CASE("orthogonality by brute-force summation") {
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3))
      for (HalfInt j : coupled_spins(j1, j2))
        for (HalfInt jp : coupled_spins(j1, j2))
          for (HalfInt m : weights(j))
            for (HalfInt mp : weights(jp)) {
              HSeries sum(6);
              for (HalfInt m1 : weights(j1))
                for (HalfInt m2 : weights(j2))
                  if (m1 + m2 == m && m1 + m2 == mp)
                    sum += qcg({j1, j2, j, m1, m2, m}) * qcg({j1, j2, jp, m1, m2, mp});
              const double delta = (j == jp && m == mp) ? 1.0 : 0.0;
              CHECK(max_abs_diff(sum, HSeries::constant(delta, 6)) < 1e-9);
            }
}

TEST_CASE("classical limit of q-CG") {
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4))
      for (HalfInt j : coupled_spins(j1, j2))
        for (HalfInt m1 : weights(j1))
          for (HalfInt m2 : weights(j2)) {
            const HalfInt m = m1 + m2;
            if (std::abs(m.twice()) > j.twice()) continue;
            CHECK(std::abs(qcg({j1, j2, j, m1, m2, m})[0] - cg({j1, j2, j, m1, m2, m})) < 1e-12);
          }
}

TEST_CASE("stretched coefficients") {
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4)) {
      const HalfInt J = j1 + j2;
      for (HalfInt m1 : weights(j1))
        for (HalfInt m2 : weights(j2)) {
          const double closed = std::sqrt(binomial(j1.twice(), (j1 + m1).as_int()) *
                                          binomial(j2.twice(), (j2 + m2).as_int()) /
                                          binomial(J.twice(), (J + m1 + m2).as_int()));
          CHECK(std::abs(cg({j1, j2, J, m1, m2, m1 + m2}) - closed) < 1e-10);
          CHECK(qcg({j1, j2, J, m1, m2, m1 + m2})[0] > 0.0);
        }
    }
}

TEST_CASE("coupling matrix layout") {
  const CouplingMatrix trivial = cg_matrix(HalfInt(0), half(3), true, 4);
  CHECK(max_abs_diff(trivial.matrix, SeriesMatrix::identity(4, 4)) < 1e-14);

  const CouplingMatrix c = cg_matrix(half(1), half(1), false, 2);
  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns.front().first == HalfInt(0));
  CHECK(c.block_offset(HalfInt(1)) == 1);
  const Eigen::VectorXd singlet = c.matrix.constant_term().col(0);
  const double s = 1 / std::sqrt(2.0);
  CHECK(singlet(0) == 0.0);
  CHECK(singlet(1) == doctest::Approx(-s));
  CHECK(singlet(2) == doctest::Approx(s));
  CHECK(singlet(3) == 0.0);

  const auto spins = coupled_spins(HalfInt(1), half(3));
  REQUIRE(spins.size() == 3);
  CHECK(spins.front() == half(1));
  CHECK(spins.back() == half(5));
}

TEST_CASE("coupling matrices intertwine the coproducts") {
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3))
      for (Generator g : {Generator::E, Generator::F, Generator::K, Generator::Kinv, Generator::e, Generator::f,
                          Generator::h}) {
        const bool deformed = is_deformed(g);
        const SeriesMatrix C = cg_matrix(j1, j2, deformed, 6).matrix;
        CHECK(max_abs_diff(C.transpose() * coproduct_rep(j1, j2, g, deformed, 6).matrix * C,
                           coupled_block_rep(j1, j2, g, deformed, 6)) < 1e-9);
      }
}

TEST_CASE("memoized coupling matrices are safe under concurrent use") {
  std::vector<std::thread> pool;
  std::vector<double> residual(8, 1.0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([t, &residual] {
      const HalfInt j1 = half(1 + t % 3), j2 = half(2 + t % 2);
      const SeriesMatrix C = cg_matrix(j1, j2, true, 5).matrix;
      residual[static_cast<std::size_t>(t)] = max_abs_diff(C.transpose() * C, SeriesMatrix::identity(C.cols(), 5));
    });
  for (auto& th : pool) th.join();
  for (double r : residual) CHECK(r < 1e-9);
}
