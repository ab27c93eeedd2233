#include "qstar/reps.hpp"

#include <algorithm>
#include <cmath>

namespace qstar {

bool is_deformed(Generator g) noexcept {
  switch (g) {
    case Generator::E:
    case Generator::F:
    case Generator::K:
    case Generator::Kinv:
      return true;
    default:
      return false;
  }
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::K: return "K";
    case Generator::Kinv: return "Kinv";
    case Generator::e: return "e";
    case Generator::f: return "f";
    case Generator::h: return "h";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  for (Generator g : {Generator::E, Generator::F, Generator::K, Generator::Kinv, Generator::e,
                      Generator::f, Generator::h})
    if (to_string(g) == text) return g;
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + std::string(text) + "'");
}

std::vector<CoproductTerm> coproduct_terms(Generator g) {
  using RF = RepFactor;
  switch (g) {
    case Generator::E:
    case Generator::F:
      return {{RF::of(g), RF::cartan(0.5)}, {RF::cartan(-0.5), RF::of(g)}};
    case Generator::K:
    case Generator::Kinv:
      return {{RF::of(g), RF::of(g)}};
    case Generator::e:
    case Generator::f:
    case Generator::h:
      return {{RF::of(g), RF::identity()}, {RF::identity(), RF::of(g)}};
  }
  return {};
}

namespace {

void check_family(Generator g, bool deformed) {
  if (is_deformed(g) != deformed)
    throw Error(ErrorKind::MixedFamily, "generator " + to_string(g) +
                                            (deformed ? " is undeformed" : " is deformed"));
}

SeriesMatrix generator_matrix(HalfInt j, Generator g, int order) {
  const int d = dim(j);
  SeriesMatrix out(d, d, order);
  const auto ms = weights(j);
  for (int i = 0; i < d; ++i) {
    const HalfInt m = ms[static_cast<std::size_t>(i)];
    const int jm = (j - m).as_int();  // j - m
    const int jp = (j + m).as_int();  // j + m
    switch (g) {
      case Generator::E:
        if (i + 1 < d) out.set_entry(i + 1, i, sqrt(q_integer(jm, order) * q_integer(jp + 1, order)));
        break;
      case Generator::F:
        if (i > 0) out.set_entry(i - 1, i, sqrt(q_integer(jp, order) * q_integer(jm + 1, order)));
        break;
      case Generator::K:
        out.set_entry(i, i, q_power(2.0 * m.value(), order));
        break;
      case Generator::Kinv:
        out.set_entry(i, i, q_power(-2.0 * m.value(), order));
        break;
      case Generator::e:
        if (i + 1 < d) out.slice(0)(i + 1, i) = std::sqrt(static_cast<double>(jm) * (jp + 1));
        break;
      case Generator::f:
        if (i > 0) out.slice(0)(i - 1, i) = std::sqrt(static_cast<double>(jp) * (jm + 1));
        break;
      case Generator::h:
        out.slice(0)(i, i) = m.twice();
        break;
    }
  }
  return out;
}

TensorOp assemble_coproduct(HalfInt j1, HalfInt j2, Generator g, int order, bool opposite) {
  const int d = dim(j1) * dim(j2);
  SeriesMatrix acc(d, d, order);
  for (const auto& term : coproduct_terms(g)) {
    const auto& a = opposite ? term.right : term.left;
    const auto& b = opposite ? term.left : term.right;
    acc += kron(factor_matrix(j1, a, order), factor_matrix(j2, b, order));
  }
  return {{j1, j2}, std::move(acc)};
}

}  // namespace

SeriesMatrix factor_matrix(HalfInt j, const RepFactor& factor, int order) {
  switch (factor.kind) {
    case RepFactor::Kind::Identity:
      return SeriesMatrix::identity(dim(j), order);
    case RepFactor::Kind::Gen:
      return generator_matrix(j, factor.gen, order);
    case RepFactor::Kind::CartanPower: {
      std::vector<HSeries> diag;
      for (HalfInt m : weights(j)) diag.push_back(q_power(2.0 * factor.power * m.value(), order));
      return diagonal(diag);
    }
  }
  return {};
}

RepMatrix irrep_generator(HalfInt j, Generator g, bool deformed, int order) {
  if (j.twice() < 0) throw Error(ErrorKind::InvalidArgument, "negative spin");
  check_family(g, deformed);
  return {j, generator_matrix(j, g, order)};
}

double verify_irrep_relations(HalfInt j, int order) {
  const SeriesMatrix E = generator_matrix(j, Generator::E, order);
  const SeriesMatrix F = generator_matrix(j, Generator::F, order);
  const SeriesMatrix K = generator_matrix(j, Generator::K, order);
  const SeriesMatrix Kinv = generator_matrix(j, Generator::Kinv, order);

  // (K - K^-1)/(q - q^-1) is diagonal with entries [2m].
  std::vector<HSeries> bracket;
  for (HalfInt m : weights(j)) bracket.push_back(q_integer(m.twice(), order));

  const double r1 = max_abs_diff(E * F - F * E, diagonal(bracket));
  const double r2 = max_abs_diff(K * E * Kinv, q_power(2, order) * E);
  const double r3 = max_abs_diff(K * F * Kinv, q_power(-2, order) * F);
  const double r4 = max_abs_diff(K * Kinv, SeriesMatrix::identity(dim(j), order));
  return std::max({r1, r2, r3, r4});
}

TensorOp coproduct_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed, int order) {
  check_family(g, deformed);
  return assemble_coproduct(j1, j2, g, order, false);
}

TensorOp coproduct_op_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed, int order) {
  check_family(g, deformed);
  return assemble_coproduct(j1, j2, g, order, true);
}

}  // namespace qstar
