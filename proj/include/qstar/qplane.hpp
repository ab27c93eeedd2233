#pragma once

// The quantum plane xy = q yx and its commutative limit, in the weight basis
//   T^j_m = [2j choose j+m]^{1/2}_{q^-2} x^{j-m} y^{j+m}
// (classical binomial in the commutative case), and the twist-induced star
// product x * y = mu(F^-1 |> (x (x) y)) on the commutative plane.

#include <map>
#include <set>
#include <string_view>
#include <utility>

#include "qstar/hseries.hpp"
#include "qstar/reps.hpp"
#include "qstar/twist.hpp"

namespace qstar {

/// Finite combination sum c_{j,m} T^j_m. Keys are (2j, 2m).
class PlaneElement {
 public:
  using Key = std::pair<int, int>;

  explicit PlaneElement(int order = kDefaultOrder) : order_(order) {}

  static PlaneElement basis(HalfInt j, HalfInt m, int order = kDefaultOrder);
  static PlaneElement unit(int order = kDefaultOrder) { return basis(HalfInt(0), HalfInt(0), order); }
  /// x = T^{1/2}_{-1/2}, y = T^{1/2}_{1/2}.
  static PlaneElement x(int order = kDefaultOrder) { return basis(half(1), half(-1), order); }
  static PlaneElement y(int order = kDefaultOrder) { return basis(half(1), half(1), order); }

  int order() const noexcept { return order_; }
  const std::map<Key, HSeries>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  HSeries coefficient(HalfInt j, HalfInt m) const;
  /// Adds c T^j_m; drops the entry if the sum is exactly zero. Throws InvalidWeight.
  void add(HalfInt j, HalfInt m, const HSeries& c);

  std::set<int> grades_twice() const;
  /// Coefficients of hbar^k as an order-0 element.
  PlaneElement slice(int k) const;
  PlaneElement truncated(int order) const;

  PlaneElement& operator+=(const PlaneElement& rhs);
  PlaneElement& operator-=(const PlaneElement& rhs);
  friend PlaneElement operator+(PlaneElement a, const PlaneElement& b) { return a += b; }
  friend PlaneElement operator-(PlaneElement a, const PlaneElement& b) { return a -= b; }
  friend PlaneElement operator*(const HSeries& s, const PlaneElement& a);
  friend PlaneElement operator*(double s, const PlaneElement& a);

 private:
  int order_;
  std::map<Key, HSeries> terms_;
};

double max_abs_diff(const PlaneElement& a, const PlaneElement& b);

/// Coefficient times x^a y^b.
struct Monomial {
  int a = 0;
  int b = 0;
  HSeries coeff;
};

/// Polynomial in commuting (or normal-ordered) x, y: (a, b) -> coefficient of x^a y^b.
using PlanePolynomial = std::map<std::pair<int, int>, HSeries>;

/// Reorders a word in {x, y} to x^a y^b, collecting q^-1 per y moved past an x.
Monomial plane_normal_form(std::string_view word, bool deformed, int order = kDefaultOrder);

/// T^j_m as a monomial of the quantum plane (q-binomial normalization).
Monomial t_basis(HalfInt j, HalfInt m, int order = kDefaultOrder);
/// T^j_m of the commutative plane (classical binomial normalization).
Monomial t_basis_classical(HalfInt j, HalfInt m, int order = kDefaultOrder);

PlanePolynomial to_polynomial(const PlaneElement& a, bool deformed);
PlaneElement from_polynomial(const PlanePolynomial& p, bool deformed, int order);

/// mu_hbar(T^{j1}_{m1} (x) T^{j2}_{m2}) = qcg(j1 j2 j1+j2; m1 m2 m1+m2) T^{j1+j2}_{m1+m2}.
PlaneElement mu_deformed(const PlaneElement& a, const PlaneElement& b);
/// Same product computed by expanding to monomials and normal ordering with xy = q yx.
PlaneElement mu_deformed_by_normal_ordering(const PlaneElement& a, const PlaneElement& b);
/// Commutative product via classical stretched CG coefficients.
PlaneElement mu_classical(const PlaneElement& a, const PlaneElement& b);
/// Commutative product computed on monomials.
PlaneElement mu_classical_by_monomials(const PlaneElement& a, const PlaneElement& b);

/// g |> a, weight-wise through rho^j. Throws MixedFamily.
PlaneElement act(Generator g, const PlaneElement& a, bool deformed);
/// Action of one coproduct leg (deformed matrices for K powers).
PlaneElement act(const RepFactor& factor, const PlaneElement& a);

/// x * y = mu(F^-1 |> (x (x) y)), per homogeneous pair through twist_rep(...).inverse.
PlaneElement star(const PlaneElement& a, const PlaneElement& b,
                  const EtaFunction& eta = EtaFunction::one());

/// B_k(a, b): the hbar^k slice of star(a, b). Throws OrderExceeded for k > order.
PlaneElement bidiff(int k, const PlaneElement& a, const PlaneElement& b,
                    const EtaFunction& eta = EtaFunction::one());

/// Max-norm of g |> (a * b) - (g_(1) |> a) * (g_(2) |> b) with D_hbar.
double verify_covariance(Generator g, const PlaneElement& a, const PlaneElement& b,
                         const EtaFunction& eta = EtaFunction::one());

/// Max-norm of (a * b) * c - a * (b * c).
double verify_associativity(const PlaneElement& a, const PlaneElement& b, const PlaneElement& c,
                            const EtaFunction& eta = EtaFunction::one());

}  // namespace qstar
