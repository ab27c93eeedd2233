#pragma once

// Clebsch-Gordan coefficients of U(su2) and U_hbar(su2).
//
// Condon-Shortley phases: <j1 j1; j2 (j - j1) | j j> > 0. The q-deformed
// coefficients use the single-sum q-Racah formula matched to the symmetric
// coproduct in reps.hpp, so that the coupling matrix is orthogonal and
// block-diagonalizes D_hbar.

#include <utility>
#include <vector>

#include "qstar/hseries.hpp"
#include "qstar/reps.hpp"
#include "qstar/series_matrix.hpp"

namespace qstar {

struct CGQuery {
  HalfInt j1, j2, j;
  HalfInt m1, m2, m;
};

/// True when |m| <= j for each pair and the triangle and m1 + m2 = m rules hold.
/// Throws InvalidQuery for malformed labels (negative spin, j - m not integral).
bool cg_allowed(const CGQuery& q);

double cg(const CGQuery& q);
HSeries qcg(const CGQuery& q, int order = kDefaultOrder);

/// Change of basis from V_{j1} (x) V_{j2} (rows (m1, m2), row-major) to the
/// coupled basis (columns (j, m), j ascending then m ascending).
struct CouplingMatrix {
  HalfInt j1, j2;
  std::vector<std::pair<HalfInt, HalfInt>> columns;
  SeriesMatrix matrix;

  /// Column offset of the spin-j block.
  Eigen::Index block_offset(HalfInt j) const;
};

CouplingMatrix cg_matrix(HalfInt j1, HalfInt j2, bool deformed, int order = kDefaultOrder);

/// Spins j1 + j2, j1 + j2 - 1, ..., |j1 - j2|, ascending.
std::vector<HalfInt> coupled_spins(HalfInt j1, HalfInt j2);

/// (+)_j rho^j(g) over coupled_spins(j1, j2), in cg_matrix column order.
SeriesMatrix coupled_block_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed,
                               int order = kDefaultOrder);

}  // namespace qstar
