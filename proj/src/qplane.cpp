#include "qstar/qplane.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qstar/cgc.hpp"

namespace qstar {

namespace {

HalfInt j_of(const PlaneElement::Key& k) { return HalfInt::from_twice(k.first); }
HalfInt m_of(const PlaneElement::Key& k) { return HalfInt::from_twice(k.second); }

void check_weight(HalfInt j, HalfInt m) {
  if (j.twice() < 0 || std::abs(m.twice()) > j.twice() || !(j - m).is_integer())
    throw Error(ErrorKind::InvalidWeight, "T^" + j.str() + "_" + m.str());
}

// Applies a per-grade matrix (columns indexed by input weight) to every homogeneous part.
template <typename MatrixFor>
PlaneElement apply_gradewise(const PlaneElement& a, MatrixFor matrix_for) {
  PlaneElement out(a.order());
  for (int tj : a.grades_twice()) {
    const HalfInt j = HalfInt::from_twice(tj);
    const SeriesMatrix M = matrix_for(j);
    const auto ms = weights(j);
    for (const auto& [key, c] : a.terms()) {
      if (key.first != tj) continue;
      const int col = weight_index(j, m_of(key));
      for (std::size_t row = 0; row < ms.size(); ++row) {
        const HSeries entry = M.entry(static_cast<Eigen::Index>(row), col);
        if (!entry.is_zero()) out.add(j, ms[row], entry * c);
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PlaneElement PlaneElement::basis(HalfInt j, HalfInt m, int order) {
  PlaneElement e(order);
  e.add(j, m, HSeries::constant(1.0, order));
  return e;
}

HSeries PlaneElement::coefficient(HalfInt j, HalfInt m) const {
  auto it = terms_.find({j.twice(), m.twice()});
  return it == terms_.end() ? HSeries(order_) : it->second;
}

void PlaneElement::add(HalfInt j, HalfInt m, const HSeries& c) {
  check_weight(j, m);
  const Key key{j.twice(), m.twice()};
  auto [it, inserted] = terms_.try_emplace(key, order_);
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::set<int> PlaneElement::grades_twice() const {
  std::set<int> out;
  for (const auto& [key, c] : terms_) out.insert(key.first);
  return out;
}

PlaneElement PlaneElement::slice(int k) const {
  if (k < 0 || k > order_) throw Error(ErrorKind::OrderExceeded, "slice " + std::to_string(k));
  PlaneElement out(0);
  for (const auto& [key, c] : terms_) out.add(j_of(key), m_of(key), HSeries::constant(c[k], 0));
  return out;
}

PlaneElement PlaneElement::truncated(int order) const {
  PlaneElement out(std::min(order, order_));
  for (const auto& [key, c] : terms_) out.add(j_of(key), m_of(key), c);
  return out;
}

PlaneElement& PlaneElement::operator+=(const PlaneElement& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (const auto& [key, c] : rhs.terms_) add(j_of(key), m_of(key), c);
  return *this;
}

PlaneElement& PlaneElement::operator-=(const PlaneElement& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (const auto& [key, c] : rhs.terms_) add(j_of(key), m_of(key), -c);
  return *this;
}

PlaneElement operator*(const HSeries& s, const PlaneElement& a) {
  PlaneElement out(std::min(s.order(), a.order_));
  for (const auto& [key, c] : a.terms_) out.add(j_of(key), m_of(key), s * c);
  return out;
}

PlaneElement operator*(double s, const PlaneElement& a) {
  PlaneElement out(a.order_);
  for (const auto& [key, c] : a.terms_) out.add(j_of(key), m_of(key), s * c);
  return out;
}

double max_abs_diff(const PlaneElement& a, const PlaneElement& b) {
  double m = 0.0;
  const int order = std::min(a.order(), b.order());
  const PlaneElement d = a - b;
  for (const auto& [key, c] : d.terms()) m = std::max(m, c.truncated(order).max_abs());
  return m;
}

// ---------------------------------------------------------------------------

Monomial plane_normal_form(std::string_view word, bool deformed, int order) {
  int xs = 0, ys = 0, inversions = 0;
  for (char ch : word) {
    if (ch == 'x') {
      ++xs;
      inversions += ys;
    } else if (ch == 'y') {
      ++ys;
    } else {
      throw Error(ErrorKind::InvalidArgument, std::string("letter '") + ch + "' is not x or y");
    }
  }
  // yx = q^-1 xy
  return {xs, ys, deformed ? q_power(-inversions, order) : HSeries::constant(1.0, order)};
}

Monomial t_basis(HalfInt j, HalfInt m, int order) {
  check_weight(j, m);
  return {(j - m).as_int(), (j + m).as_int(),
          sqrt(gauss_binomial(j.twice(), (j + m).as_int(), -2, order))};
}

Monomial t_basis_classical(HalfInt j, HalfInt m, int order) {
  check_weight(j, m);
  return {(j - m).as_int(), (j + m).as_int(),
          HSeries::constant(std::sqrt(binomial(j.twice(), (j + m).as_int())), order)};
}

PlanePolynomial to_polynomial(const PlaneElement& a, bool deformed) {
  PlanePolynomial out;
  for (const auto& [key, c] : a.terms()) {
    const Monomial t = deformed ? t_basis(j_of(key), m_of(key), a.order())
                                : t_basis_classical(j_of(key), m_of(key), a.order());
    auto [it, inserted] = out.try_emplace({t.a, t.b}, a.order());
    it->second += t.coeff * c;
  }
  return out;
}

PlaneElement from_polynomial(const PlanePolynomial& p, bool deformed, int order) {
  PlaneElement out(order);
  for (const auto& [ab, c] : p) {
    const auto [a, b] = ab;
    if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    const HalfInt j = HalfInt::from_twice(a + b);
    const HalfInt m = HalfInt::from_twice(b - a);
    const Monomial t = deformed ? t_basis(j, m, order) : t_basis_classical(j, m, order);
    out.add(j, m, invert(t.coeff) * c.truncated(order));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Coefficient>
PlaneElement stretched_product(const PlaneElement& a, const PlaneElement& b, Coefficient coeff) {
  PlaneElement out(std::min(a.order(), b.order()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const CGQuery q{j_of(ka), j_of(kb), j_of(ka) + j_of(kb),
                      m_of(ka), m_of(kb), m_of(ka) + m_of(kb)};
      out.add(q.j, q.m, coeff(q, out.order()) * ca * cb);
    }
  return out;
}

}  // namespace

PlaneElement mu_deformed(const PlaneElement& a, const PlaneElement& b) {
  return stretched_product(a, b, [](const CGQuery& q, int order) { return qcg(q, order); });
}

PlaneElement mu_classical(const PlaneElement& a, const PlaneElement& b) {
  return stretched_product(
      a, b, [](const CGQuery& q, int order) { return HSeries::constant(cg(q), order); });
}

namespace {

PlaneElement product_by_monomials(const PlaneElement& a, const PlaneElement& b, bool deformed) {
  const int order = std::min(a.order(), b.order());
  PlanePolynomial product;
  for (const auto& [pa, ca] : to_polynomial(a.truncated(order), deformed))
    for (const auto& [pb, cb] : to_polynomial(b.truncated(order), deformed)) {
      const std::string word = std::string(pa.first, 'x') + std::string(pa.second, 'y') +
                               std::string(pb.first, 'x') + std::string(pb.second, 'y');
      const Monomial nf = plane_normal_form(word, deformed, order);
      auto [it, inserted] = product.try_emplace({nf.a, nf.b}, order);
      it->second += nf.coeff * ca * cb;
    }
  return from_polynomial(product, deformed, order);
}

}  // namespace

PlaneElement mu_deformed_by_normal_ordering(const PlaneElement& a, const PlaneElement& b) {
  return product_by_monomials(a, b, true);
}

PlaneElement mu_classical_by_monomials(const PlaneElement& a, const PlaneElement& b) {
  return product_by_monomials(a, b, false);
}

// ---------------------------------------------------------------------------

PlaneElement act(Generator g, const PlaneElement& a, bool deformed) {
  return apply_gradewise(a, [&](HalfInt j) {
    return irrep_generator(j, g, deformed, a.order()).matrix;
  });
}

PlaneElement act(const RepFactor& factor, const PlaneElement& a) {
  return apply_gradewise(a, [&](HalfInt j) { return factor_matrix(j, factor, a.order()); });
}

PlaneElement star(const PlaneElement& a, const PlaneElement& b, const EtaFunction& eta) {
  const int order = std::min(a.order(), b.order());
  PlaneElement out(order);
  for (int t1 : a.grades_twice())
    for (int t2 : b.grades_twice()) {
      const HalfInt j1 = HalfInt::from_twice(t1), j2 = HalfInt::from_twice(t2);
      const HalfInt J = j1 + j2;
      const auto w1 = weights(j1), w2 = weights(j2);

      // Coefficient tensor of the homogeneous part of a (x) b.
      SeriesMatrix v(static_cast<Eigen::Index>(w1.size() * w2.size()), 1, order);
      for (std::size_t p = 0; p < w1.size(); ++p)
        for (std::size_t r = 0; r < w2.size(); ++r)
          v.set_entry(static_cast<Eigen::Index>(p * w2.size() + r), 0,
                      a.coefficient(j1, w1[p]) * b.coefficient(j2, w2[r]));
      if (v.max_abs() == 0.0) continue;

      const SeriesMatrix w = twist_inverse_matrix(j1, j2, eta, order) * v;
      for (std::size_t p = 0; p < w1.size(); ++p)
        for (std::size_t r = 0; r < w2.size(); ++r) {
          const HalfInt M = w1[p] + w2[r];
          const double c = cg({j1, j2, J, w1[p], w2[r], M});
          out.add(J, M, c * w.entry(static_cast<Eigen::Index>(p * w2.size() + r), 0));
        }
    }
  return out;
}

PlaneElement bidiff(int k, const PlaneElement& a, const PlaneElement& b, const EtaFunction& eta) {
  const int order = std::min(a.order(), b.order());
  if (k < 0 || k > order)
    throw Error(ErrorKind::OrderExceeded,
                "B_" + std::to_string(k) + " needs truncation order >= " + std::to_string(k));
  return star(a, b, eta).slice(k);
}

double verify_covariance(Generator g, const PlaneElement& a, const PlaneElement& b,
                         const EtaFunction& eta) {
  if (!is_deformed(g)) throw Error(ErrorKind::MixedFamily, "covariance needs a deformed generator");
  const PlaneElement lhs = act(g, star(a, b, eta), true);
  PlaneElement rhs(lhs.order());
  for (const auto& term : coproduct_terms(g))
    rhs += star(act(term.left, a), act(term.right, b), eta);
  return max_abs_diff(lhs, rhs);
}

double verify_associativity(const PlaneElement& a, const PlaneElement& b, const PlaneElement& c,
                            const EtaFunction& eta) {
  return max_abs_diff(star(star(a, b, eta), c, eta), star(a, star(b, c, eta), eta));
}

}  // namespace qstar
