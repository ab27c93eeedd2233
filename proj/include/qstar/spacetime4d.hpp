#pragma once

// Quantum Euclidean 4-space and quantum Minkowski space as star products on
// the commutative algebra X (x) X of two planes. An element of X (x) X sits
// on legs (1, 2); in a product a * b the four legs are (a1, a2, b1, b2), and
//   F_so4  = F_13 F_24,
//   F_sl2C = R^-1_23 F_13 F_24,
// with R the universal R-matrix of U_hbar(su2):
//   R = q^{H (x) H / 2} sum_n q^{n(n-1)/2} (q - q^-1)^n / [n]! (K^{1/2} E)^n (x) (F K^{-1/2})^n.

#include <array>
#include <map>

#include "qstar/qplane.hpp"
#include "qstar/reps.hpp"
#include "qstar/twist.hpp"

namespace qstar {

enum class Variant { Euclidean, Minkowski };
enum class LegCopy { Left, Right };

std::string to_string(Variant v);

/// Finite combination of T^j_m (x) T^{j'}_{m'}; keys are (2j, 2m, 2j', 2m').
class FourElement {
 public:
  using Key = std::array<int, 4>;

  explicit FourElement(int order = kDefaultOrder) : order_(order) {}

  static FourElement unit(int order = kDefaultOrder);
  /// a (x) b for plane elements.
  static FourElement tensor(const PlaneElement& a, const PlaneElement& b);

  int order() const noexcept { return order_; }
  const std::map<Key, HSeries>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  HSeries coefficient(HalfInt j, HalfInt m, HalfInt jp, HalfInt mp) const;
  void add(HalfInt j, HalfInt m, HalfInt jp, HalfInt mp, const HSeries& c);

  FourElement slice(int k) const;

  FourElement& operator+=(const FourElement& rhs);
  FourElement& operator-=(const FourElement& rhs);
  friend FourElement operator+(FourElement a, const FourElement& b) { return a += b; }
  friend FourElement operator-(FourElement a, const FourElement& b) { return a -= b; }

 private:
  int order_;
  std::map<Key, HSeries> terms_;
};

double max_abs_diff(const FourElement& a, const FourElement& b);

/// The four coordinate functions x (x) 1, y (x) 1, 1 (x) x, 1 (x) y.
std::array<FourElement, 4> coordinate_functions(int order = kDefaultOrder);

struct RMatrixRep {
  HalfInt j1, j2;
  TensorOp matrix;
  TensorOp inverse;
};

RMatrixRep r_matrix_rep(HalfInt j1, HalfInt j2, int order = kDefaultOrder);

/// Max-norm of R D_hbar(g) - D_hbar^op(g) R on V_{j1} (x) V_{j2}.
double r_intertwining_residual(HalfInt j1, HalfInt j2, Generator g, int order = kDefaultOrder);
/// Max-norm of R12 R13 R23 - R23 R13 R12 on V_{j1} (x) V_{j2} (x) V_{j3}.
double yang_baxter_residual(HalfInt j1, HalfInt j2, HalfInt j3, int order = kDefaultOrder);

using Spins4 = std::array<HalfInt, 4>;

/// F_13 F_24 (euclidean) or R^-1_23 F_13 F_24 (minkowski) on V_{j1} (x) ... (x) V_{j4}.
TensorOp composite_twist(Variant variant, const Spins4& spins,
                         const EtaFunction& eta = EtaFunction::one(), int order = kDefaultOrder);
/// Inverse of composite_twist assembled from the factor inverses.
TensorOp composite_twist_inverse(Variant variant, const Spins4& spins,
                                 const EtaFunction& eta = EtaFunction::one(),
                                 int order = kDefaultOrder);

FourElement star4(const FourElement& a, const FourElement& b, Variant variant,
                  const EtaFunction& eta = EtaFunction::one());

/// Commutative product (mu (x) mu) of two four-space elements.
FourElement mu4_classical(const FourElement& a, const FourElement& b);

double verify_associativity4(const FourElement& a, const FourElement& b, const FourElement& c,
                             Variant variant, const EtaFunction& eta = EtaFunction::one());

/// Covariance of the euclidean star product under one U_hbar(su2) copy; the
/// left copy acts on the first plane factor, the right copy on the second.
double verify_covariance4(Generator g, LegCopy copy, const FourElement& a, const FourElement& b,
                          const EtaFunction& eta = EtaFunction::one());

/// Action of one coproduct leg on the chosen plane factor.
FourElement act4(const RepFactor& factor, LegCopy copy, const FourElement& a);

}  // namespace qstar
