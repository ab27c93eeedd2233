#include "qstar/spacetime4d.hpp"

#include <algorithm>
#include <cmath>

#include "qstar/cgc.hpp"

namespace qstar {

std::string to_string(Variant v) { return v == Variant::Euclidean ? "euclid" : "minkowski"; }

namespace {

HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

FourElement FourElement::unit(int order) {
  FourElement e(order);
  e.add(HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), HSeries::constant(1.0, order));
  return e;
}

FourElement FourElement::tensor(const PlaneElement& a, const PlaneElement& b) {
  FourElement out(std::min(a.order(), b.order()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add(h2(ka.first), h2(ka.second), h2(kb.first), h2(kb.second), ca * cb);
  return out;
}

HSeries FourElement::coefficient(HalfInt j, HalfInt m, HalfInt jp, HalfInt mp) const {
  auto it = terms_.find({j.twice(), m.twice(), jp.twice(), mp.twice()});
  return it == terms_.end() ? HSeries(order_) : it->second;
}

void FourElement::add(HalfInt j, HalfInt m, HalfInt jp, HalfInt mp, const HSeries& c) {
  for (auto [s, w] : {std::pair{j, m}, std::pair{jp, mp}})
    if (s.twice() < 0 || std::abs(w.twice()) > s.twice() || !(s - w).is_integer())
      throw Error(ErrorKind::InvalidWeight, "T^" + s.str() + "_" + w.str());
  auto [it, inserted] = terms_.try_emplace({j.twice(), m.twice(), jp.twice(), mp.twice()}, order_);
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FourElement FourElement::slice(int k) const {
  if (k < 0 || k > order_) throw Error(ErrorKind::OrderExceeded, "slice " + std::to_string(k));
  FourElement out(0);
  for (const auto& [key, c] : terms_)
    out.add(h2(key[0]), h2(key[1]), h2(key[2]), h2(key[3]), HSeries::constant(c[k], 0));
  return out;
}

FourElement& FourElement::operator+=(const FourElement& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (const auto& [key, c] : rhs.terms_) add(h2(key[0]), h2(key[1]), h2(key[2]), h2(key[3]), c);
  return *this;
}

FourElement& FourElement::operator-=(const FourElement& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (const auto& [key, c] : rhs.terms_) add(h2(key[0]), h2(key[1]), h2(key[2]), h2(key[3]), -c);
  return *this;
}

double max_abs_diff(const FourElement& a, const FourElement& b) {
  double m = 0.0;
  const int order = std::min(a.order(), b.order());
  const FourElement d = a - b;
  for (const auto& [key, c] : d.terms()) m = std::max(m, c.truncated(order).max_abs());
  return m;
}

std::array<FourElement, 4> coordinate_functions(int order) {
  const auto x = PlaneElement::x(order), y = PlaneElement::y(order);
  const auto one = PlaneElement::unit(order);
  return {FourElement::tensor(x, one), FourElement::tensor(y, one), FourElement::tensor(one, x),
          FourElement::tensor(one, y)};
}

// ---------------------------------------------------------------------------

RMatrixRep r_matrix_rep(HalfInt j1, HalfInt j2, int order) {
  const int d1 = dim(j1), d2 = dim(j2);
  const SeriesMatrix raise = factor_matrix(j1, RepFactor::cartan(0.5), order) *
                             factor_matrix(j1, RepFactor::of(Generator::E), order);
  const SeriesMatrix lower = factor_matrix(j2, RepFactor::of(Generator::F), order) *
                             factor_matrix(j2, RepFactor::cartan(-0.5), order);

  // q^{H (x) H / 2} = q^{2 m1 m2}.
  std::vector<HSeries> cartan;
  for (HalfInt m1 : weights(j1))
    for (HalfInt m2 : weights(j2)) cartan.push_back(q_power(2.0 * m1.value() * m2.value(), order));

  const HSeries q_diff = q_power(1, order) - q_power(-1, order);
  SeriesMatrix sum(d1 * d2, d1 * d2, order);
  SeriesMatrix raise_n = SeriesMatrix::identity(d1, order);
  SeriesMatrix lower_n = SeriesMatrix::identity(d2, order);
  HSeries q_diff_n = HSeries::constant(1.0, order);
  // E and F are nilpotent; the sum stops at n = min(2 j1, 2 j2).
  for (int n = 0; n <= std::min(j1.twice(), j2.twice()); ++n) {
    if (n > 0) {
      raise_n = raise_n * raise;
      lower_n = lower_n * lower;
      q_diff_n *= q_diff;
    }
    const HSeries c = q_power(0.5 * n * (n - 1), order) * q_diff_n * invert(q_factorial(n, order));
    sum += c * kron(raise_n, lower_n);
  }
  SeriesMatrix R = diagonal(cartan) * sum;
  SeriesMatrix Rinv = R.inverse();
  return {j1, j2, {{j1, j2}, std::move(R)}, {{j1, j2}, std::move(Rinv)}};
}

double r_intertwining_residual(HalfInt j1, HalfInt j2, Generator g, int order) {
  const SeriesMatrix R = r_matrix_rep(j1, j2, order).matrix.matrix;
  return max_abs_diff(R * coproduct_rep(j1, j2, g, true, order).matrix,
                      coproduct_op_rep(j1, j2, g, true, order).matrix * R);
}

double yang_baxter_residual(HalfInt j1, HalfInt j2, HalfInt j3, int order) {
  const std::vector<int> dims{dim(j1), dim(j2), dim(j3)};
  const SeriesMatrix R12 = embed_legs(r_matrix_rep(j1, j2, order).matrix.matrix, {0, 1}, dims);
  const SeriesMatrix R13 = embed_legs(r_matrix_rep(j1, j3, order).matrix.matrix, {0, 2}, dims);
  const SeriesMatrix R23 = embed_legs(r_matrix_rep(j2, j3, order).matrix.matrix, {1, 2}, dims);
  return max_abs_diff(R12 * R13 * R23, R23 * R13 * R12);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> dims_of(const Spins4& s) { return {dim(s[0]), dim(s[1]), dim(s[2]), dim(s[3])}; }

}  // namespace

TensorOp composite_twist(Variant variant, const Spins4& s, const EtaFunction& eta, int order) {
  const auto dims = dims_of(s);
  SeriesMatrix op = embed_legs(twist_rep(s[0], s[2], eta, order).forward.matrix, {0, 2}, dims) *
                    embed_legs(twist_rep(s[1], s[3], eta, order).forward.matrix, {1, 3}, dims);
  if (variant == Variant::Minkowski)
    op = embed_legs(r_matrix_rep(s[1], s[2], order).inverse.matrix, {1, 2}, dims) * op;
  return {{s.begin(), s.end()}, std::move(op)};
}

TensorOp composite_twist_inverse(Variant variant, const Spins4& s, const EtaFunction& eta,
                                 int order) {
  const auto dims = dims_of(s);
  SeriesMatrix op = embed_legs(twist_inverse_matrix(s[1], s[3], eta, order), {1, 3}, dims) *
                    embed_legs(twist_inverse_matrix(s[0], s[2], eta, order), {0, 2}, dims);
  if (variant == Variant::Minkowski)
    op = op * embed_legs(r_matrix_rep(s[1], s[2], order).matrix.matrix, {1, 2}, dims);
  return {{s.begin(), s.end()}, std::move(op)};
}

namespace {

// Groups terms by grade pair (2j, 2j').
std::map<std::pair<int, int>, std::vector<std::pair<FourElement::Key, HSeries>>> by_grade(
    const FourElement& a) {
  std::map<std::pair<int, int>, std::vector<std::pair<FourElement::Key, HSeries>>> out;
  for (const auto& [key, c] : a.terms()) out[{key[0], key[2]}].emplace_back(key, c);
  return out;
}

// Applies `apply_op` to the four-leg coefficient tensor
// of each homogeneous part of a (x) b, then multiplies legs (1,3) and (2,4).
template <typename ApplyOp>
FourElement twisted_product(const FourElement& a, const FourElement& b, ApplyOp operator_for) {
  const int order = std::min(a.order(), b.order());
  FourElement out(order);
  for (const auto& [ga, terms_a] : by_grade(a))
    for (const auto& [gb, terms_b] : by_grade(b)) {
      const Spins4 s{h2(ga.first), h2(ga.second), h2(gb.first), h2(gb.second)};
      const auto dims = dims_of(s);
      const Eigen::Index total = static_cast<Eigen::Index>(dims[0]) * dims[1] * dims[2] * dims[3];
      auto index = [&](int i0, int i1, int i2, int i3) {
        return ((static_cast<Eigen::Index>(i0) * dims[1] + i1) * dims[2] + i2) * dims[3] + i3;
      };

      SeriesMatrix v(total, 1, order);
      for (const auto& [ka, ca] : terms_a)
        for (const auto& [kb, cb] : terms_b)
          v.add_to_entry(index(weight_index(s[0], h2(ka[1])), weight_index(s[1], h2(ka[3])),
                               weight_index(s[2], h2(kb[1])), weight_index(s[3], h2(kb[3]))),
                         0, ca * cb);

      const SeriesMatrix w = operator_for(s, order, v);

      const HalfInt J13 = s[0] + s[2], J24 = s[1] + s[3];
      const auto w0 = weights(s[0]), w1 = weights(s[1]), w2 = weights(s[2]), w3 = weights(s[3]);
      for (int i0 = 0; i0 < dims[0]; ++i0)
        for (int i1 = 0; i1 < dims[1]; ++i1)
          for (int i2 = 0; i2 < dims[2]; ++i2)
            for (int i3 = 0; i3 < dims[3]; ++i3) {
              const HSeries c = w.entry(index(i0, i1, i2, i3), 0);
              if (c.is_zero()) continue;
              const HalfInt M13 = w0[i0] + w2[i2], M24 = w1[i1] + w3[i3];
              const double cg13 = cg({s[0], s[2], J13, w0[i0], w2[i2], M13});
              const double cg24 = cg({s[1], s[3], J24, w1[i1], w3[i3], M24});
              out.add(J13, M13, J24, M24, (cg13 * cg24) * c);
            }
    }
  return out;
}

}  // namespace

FourElement star4(const FourElement& a, const FourElement& b, Variant variant,
                  const EtaFunction& eta) {
  // F^-1 = F^-1_24 F^-1_13 (R_23), applied leg by leg.
  return twisted_product(a, b, [&](const Spins4& s, int order, const SeriesMatrix& v) {
    const auto dims = dims_of(s);
    SeriesMatrix w = v;
    if (variant == Variant::Minkowski)
      w = apply_legs(r_matrix_rep(s[1], s[2], order).matrix.matrix, {1, 2}, dims, w);
    w = apply_legs(twist_inverse_matrix(s[0], s[2], eta, order), {0, 2}, dims, w);
    return apply_legs(twist_inverse_matrix(s[1], s[3], eta, order), {1, 3}, dims, w);
  });
}

FourElement mu4_classical(const FourElement& a, const FourElement& b) {
  return twisted_product(a, b, [](const Spins4&, int, const SeriesMatrix& v) { return v; });
}

double verify_associativity4(const FourElement& a, const FourElement& b, const FourElement& c,
                             Variant variant, const EtaFunction& eta) {
  return max_abs_diff(star4(star4(a, b, variant, eta), c, variant, eta),
                      star4(a, star4(b, c, variant, eta), variant, eta));
}

FourElement act4(const RepFactor& factor, LegCopy copy, const FourElement& a) {
  FourElement out(a.order());
  for (const auto& [key, c] : a.terms()) {
    const HalfInt j = h2(copy == LegCopy::Left ? key[0] : key[2]);
    const HalfInt m = h2(copy == LegCopy::Left ? key[1] : key[3]);
    const SeriesMatrix M = factor_matrix(j, factor, a.order());
    const int col = weight_index(j, m);
    const auto ms = weights(j);
    for (std::size_t row = 0; row < ms.size(); ++row) {
      const HSeries entry = M.entry(static_cast<Eigen::Index>(row), col);
      if (entry.is_zero()) continue;
      if (copy == LegCopy::Left)
        out.add(j, ms[row], h2(key[2]), h2(key[3]), entry * c);
      else
        out.add(h2(key[0]), h2(key[1]), j, ms[row], entry * c);
    }
  }
  return out;
}

double verify_covariance4(Generator g, LegCopy copy, const FourElement& a, const FourElement& b,
                          const EtaFunction& eta) {
  if (!is_deformed(g)) throw Error(ErrorKind::MixedFamily, "covariance needs a deformed generator");
  const FourElement lhs = act4(RepFactor::of(g), copy, star4(a, b, Variant::Euclidean, eta));
  FourElement rhs(lhs.order());
  for (const auto& term : coproduct_terms(g))
    rhs += star4(act4(term.left, copy, a), act4(term.right, copy, b), Variant::Euclidean, eta);
  return max_abs_diff(lhs, rhs);
}

}  // namespace qstar
