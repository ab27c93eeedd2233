#pragma once

// Spin-j representations of U_hbar(su2) and U(su2), and their coproducts.
//
// Conventions: weight basis v_m, m = -j..j ascending; K = q^H with
// K v_m = q^{2m} v_m; E, F act by sqrt([j-m][j+m+1]) and sqrt([j+m][j-m+1]).
// Deformed coproduct (symmetric form):
//   D(E) = E (x) K^{1/2} + K^{-1/2} (x) E
//   D(F) = F (x) K^{1/2} + K^{-1/2} (x) F
//   D(K) = K (x) K
// Undeformed generators e, f, h use D(g) = g (x) 1 + 1 (x) g.

#include <string>
#include <vector>

#include "qstar/hseries.hpp"
#include "qstar/series_matrix.hpp"

namespace qstar {

enum class Generator { E, F, K, Kinv, e, f, h };

bool is_deformed(Generator g) noexcept;
std::string to_string(Generator g);
/// Accepts E, F, K, Kinv, e, f, h.
Generator parse_generator(std::string_view text);

struct RepMatrix {
  HalfInt spin;
  SeriesMatrix matrix;
};

/// Operator on V_{j1} (x) ... (x) V_{jn}, row-major over factors.
struct TensorOp {
  std::vector<HalfInt> factor_spins;
  SeriesMatrix matrix;

  Eigen::Index dim() const noexcept { return matrix.rows(); }
};

/// One tensor leg of a coproduct term: identity, a generator, or K^power.
struct RepFactor {
  enum class Kind { Identity, Gen, CartanPower };
  Kind kind = Kind::Identity;
  Generator gen = Generator::E;
  double power = 0.0;

  static RepFactor identity() { return {}; }
  static RepFactor of(Generator g) { return {Kind::Gen, g, 0.0}; }
  static RepFactor cartan(double power) { return {Kind::CartanPower, Generator::K, power}; }
};

struct CoproductTerm {
  RepFactor left;
  RepFactor right;
};

/// Sweedler terms of D_hbar(g) for deformed tags, D(g) for undeformed tags.
std::vector<CoproductTerm> coproduct_terms(Generator g);

/// Matrix of a single factor on V_j.
SeriesMatrix factor_matrix(HalfInt j, const RepFactor& factor, int order = kDefaultOrder);

/// rho^j(g). Throws MixedFamily if `deformed` disagrees with the tag.
RepMatrix irrep_generator(HalfInt j, Generator g, bool deformed, int order = kDefaultOrder);

/// Max residual of [E,F] - (K-K^-1)/(q-q^-1), K E K^-1 - q^2 E, K F K^-1 - q^-2 F on V_j.
double verify_irrep_relations(HalfInt j, int order = kDefaultOrder);

/// (rho^{j1} (x) rho^{j2})(D(g)). Throws MixedFamily.
TensorOp coproduct_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed,
                       int order = kDefaultOrder);

/// Same for the opposite coproduct D^op(g) = sigma o D(g).
TensorOp coproduct_op_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed,
                          int order = kDefaultOrder);

inline int dim(HalfInt j) { return j.twice() + 1; }
/// Index of weight m in the ascending basis of V_j.
inline int weight_index(HalfInt j, HalfInt m) { return (m.twice() + j.twice()) / 2; }

}  // namespace qstar
