#pragma once

// Representations of Drinfeld twists F relating D to D_hbar:
//
//   (rho^{j1} (x) rho^{j2})(F)^{m1 m2}_{m1' m2'}
//       = sum_{j,m} eta(j1,j2,j) qcg(j1 j2 j; m1 m2 m) cg(j1 j2 j; m1' m2' m)
//
// i.e. F = Cq diag(eta) C^T with Cq, C the deformed and classical coupling
// matrices. The inverse is C diag(1/eta) Cq^T.

#include <functional>
#include <optional>
#include <string>

#include "qstar/cgc.hpp"
#include "qstar/reps.hpp"

namespace qstar {

/// eta(j1, j2, j) in R[[hbar]]; an empty optional means "undefined".
class EtaFunction {
 public:
  using Fn = std::function<std::optional<HSeries>(HalfInt j1, HalfInt j2, HalfInt j, int order)>;

  /// eta == 1.
  EtaFunction();
  EtaFunction(Fn fn, std::string name);

  static EtaFunction one() { return {}; }
  /// `base` with the value at one triple replaced.
  static EtaFunction with_value(const EtaFunction& base, HalfInt j1, HalfInt j2, HalfInt j,
                                const HSeries& value);
  /// eta'(j1, j2, j) = c(j) eta(j1, j2, j).
  static EtaFunction gauged(const EtaFunction& base,
                            std::function<HSeries(HalfInt j, int order)> c);

  std::optional<HSeries> at(HalfInt j1, HalfInt j2, HalfInt j, int order) const {
    return fn_(j1, j2, j, order);
  }
  /// Value with EtaUndefined / NonInvertibleEta checks.
  HSeries require(HalfInt j1, HalfInt j2, HalfInt j, int order) const;

  const std::string& name() const noexcept { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

struct TwistRep {
  HalfInt j1, j2;
  TensorOp forward;
  TensorOp inverse;
  EtaFunction eta;
  /// max |inverse - forward^{-1}| with forward^{-1} from order-by-order matrix inversion.
  double inversion_residual = 0.0;
};

TwistRep twist_rep(HalfInt j1, HalfInt j2, const EtaFunction& eta = EtaFunction::one(),
                   int order = kDefaultOrder);

/// C diag(1/eta) Cq^T alone.
SeriesMatrix twist_inverse_matrix(HalfInt j1, HalfInt j2, const EtaFunction& eta,
                                  int order = kDefaultOrder);

/// Max-norm of D_hbar(g) F - F D(g~), where g~ is the image of g in U(su2)[[hbar]]:
/// for K it is exp(hbar h), for E and F the element acting on each classical
/// spin-j block as rho^j(g).
double verify_intertwiner(const TwistRep& tw, Generator g);

/// Phi = (D (x) id)(F^-1) (F^-1 (x) 1) (1 (x) F) (id (x) D)(F) on V_{j1} (x) V_{j2} (x) V_{j3}.
TensorOp coassociator_rep(HalfInt j1, HalfInt j2, HalfInt j3,
                          const EtaFunction& eta = EtaFunction::one(), int order = kDefaultOrder);

/// max |mu3 Phi - mu3| with mu3 the commutative triple product onto the top
/// spin j1 + j2 + j3; zero exactly when Phi acts trivially on products xyz.
double coassociator_product_residual(HalfInt j1, HalfInt j2, HalfInt j3,
                                     const EtaFunction& eta = EtaFunction::one(),
                                     int order = kDefaultOrder);

/// (D (x) id)(X) where X is given per coupled spin j as an operator on V_j (x) V_{j3}.
SeriesMatrix coproduct_left_leg(HalfInt j1, HalfInt j2, HalfInt j3,
                                const std::function<SeriesMatrix(HalfInt j)>& block, int order);
/// (id (x) D)(X) where X is given per coupled spin j as an operator on V_{j1} (x) V_j.
SeriesMatrix coproduct_right_leg(HalfInt j1, HalfInt j2, HalfInt j3,
                                 const std::function<SeriesMatrix(HalfInt j)>& block, int order);

}  // namespace qstar
