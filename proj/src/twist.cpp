#include "qstar/twist.hpp"

#include <cmath>
#include <utility>

namespace qstar {

EtaFunction::EtaFunction()
    : fn_([](HalfInt, HalfInt, HalfInt, int order) -> std::optional<HSeries> {
        return HSeries::constant(1.0, order);
      }),
      name_("one") {}

EtaFunction::EtaFunction(Fn fn, std::string name) : fn_(std::move(fn)), name_(std::move(name)) {}

EtaFunction EtaFunction::with_value(const EtaFunction& base, HalfInt j1, HalfInt j2, HalfInt j,
                                    const HSeries& value) {
  auto fn = [base, j1, j2, j, value](HalfInt a, HalfInt b, HalfInt c,
                                     int order) -> std::optional<HSeries> {
    if (a == j1 && b == j2 && c == j) return value.truncated(order);
    return base.at(a, b, c, order);
  };
  return {fn, base.name() + "+override(" + j1.str() + "," + j2.str() + "," + j.str() + ")"};
}

EtaFunction EtaFunction::gauged(const EtaFunction& base,
                                std::function<HSeries(HalfInt j, int order)> c) {
  auto fn = [base, c = std::move(c)](HalfInt a, HalfInt b, HalfInt j,
                                     int order) -> std::optional<HSeries> {
    auto v = base.at(a, b, j, order);
    if (!v) return std::nullopt;
    return c(j, order) * *v;
  };
  return {fn, base.name() + "+gauge"};
}

HSeries EtaFunction::require(HalfInt j1, HalfInt j2, HalfInt j, int order) const {
  auto v = at(j1, j2, j, order);
  const std::string where = "eta(" + j1.str() + "," + j2.str() + "," + j.str() + ")";
  if (!v) throw Error(ErrorKind::EtaUndefined, where);
  if (std::abs(v->constant_term()) < 1e-12) throw Error(ErrorKind::NonInvertibleEta, where);
  return v->truncated(order);
}

SeriesMatrix twist_inverse_matrix(HalfInt j1, HalfInt j2, const EtaFunction& eta, int order) {
  const CouplingMatrix deformed = cg_matrix(j1, j2, true, order);
  const CouplingMatrix classical = cg_matrix(j1, j2, false, order);
  std::vector<HSeries> eta_inv_diag;
  for (const auto& [j, m] : deformed.columns) eta_inv_diag.push_back(invert(eta.require(j1, j2, j, order)));
  return classical.matrix * diagonal(eta_inv_diag) * deformed.matrix.transpose();
}

TwistRep twist_rep(HalfInt j1, HalfInt j2, const EtaFunction& eta, int order) {
  const CouplingMatrix deformed = cg_matrix(j1, j2, true, order);
  const CouplingMatrix classical = cg_matrix(j1, j2, false, order);

  std::vector<HSeries> eta_diag, eta_inv_diag;
  for (const auto& [j, m] : deformed.columns) {
    eta_diag.push_back(eta.require(j1, j2, j, order));
    eta_inv_diag.push_back(invert(eta_diag.back()));
  }
  SeriesMatrix forward = deformed.matrix * diagonal(eta_diag) * classical.matrix.transpose();
  SeriesMatrix inverse = classical.matrix * diagonal(eta_inv_diag) * deformed.matrix.transpose();
  const double residual = max_abs_diff(inverse, forward.inverse());
  return {j1, j2, {{j1, j2}, std::move(forward)}, {{j1, j2}, std::move(inverse)}, eta, residual};
}

double verify_intertwiner(const TwistRep& tw, Generator g) {
  if (!is_deformed(g))
    throw Error(ErrorKind::MixedFamily, "verify_intertwiner expects a deformed generator");
  const int order = tw.forward.matrix.order();
  const SeriesMatrix& F = tw.forward.matrix;
  const SeriesMatrix lhs = coproduct_rep(tw.j1, tw.j2, g, true, order).matrix * F;

  SeriesMatrix partner;
  if (g == Generator::K || g == Generator::Kinv) {
    // exp(+-hbar (h (x) 1 + 1 (x) h)) evaluated on the product weight basis.
    const double sign = g == Generator::K ? 1.0 : -1.0;
    std::vector<HSeries> diag;
    for (HalfInt m1 : weights(tw.j1))
      for (HalfInt m2 : weights(tw.j2))
        diag.push_back(exp_nilpotent(sign * (m1 + m2).twice() * HSeries::hbar(order)));
    partner = diagonal(diag);
  } else {
    const SeriesMatrix C = cg_matrix(tw.j1, tw.j2, false, order).matrix;
    partner = C * coupled_block_rep(tw.j1, tw.j2, g, true, order) * C.transpose();
  }
  return max_abs_diff(lhs, F * partner);
}

SeriesMatrix coproduct_left_leg(HalfInt j1, HalfInt j2, HalfInt j3,
                                const std::function<SeriesMatrix(HalfInt j)>& block, int order) {
  const SeriesMatrix C12 = cg_matrix(j1, j2, false, order).matrix;
  const SeriesMatrix I3 = SeriesMatrix::identity(dim(j3), order);
  // Columns of C12 (x) 1 are ((j, m), m3), contiguous per j.
  std::vector<SeriesMatrix> blocks;
  for (HalfInt j : coupled_spins(j1, j2)) blocks.push_back(block(j));
  return kron(C12, I3) * direct_sum(blocks) * kron(C12.transpose(), I3);
}

SeriesMatrix coproduct_right_leg(HalfInt j1, HalfInt j2, HalfInt j3,
                                 const std::function<SeriesMatrix(HalfInt j)>& block, int order) {
  const CouplingMatrix C23 = cg_matrix(j2, j3, false, order);
  const int d1 = dim(j1);
  const Eigen::Index d23 = C23.matrix.cols();
  // Columns of 1 (x) C23 are (m1, (j, m)): block j sits at offsets (m1, off_j + m).
  SeriesMatrix middle(d1 * d23, d1 * d23, order);
  for (HalfInt j : coupled_spins(j2, j3)) {
    const SeriesMatrix op = block(j);
    const Eigen::Index off = C23.block_offset(j);
    const int dj = dim(j);
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < dj; ++b)
        for (int a2 = 0; a2 < d1; ++a2)
          for (int b2 = 0; b2 < dj; ++b2)
            for (int k = 0; k <= middle.order(); ++k)
              middle.slice(k)(a * d23 + off + b, a2 * d23 + off + b2) =
                  op.slice(k)(a * dj + b, a2 * dj + b2);
  }
  const SeriesMatrix I1 = SeriesMatrix::identity(d1, order);
  return kron(I1, C23.matrix) * middle * kron(I1, C23.matrix.transpose());
}

TensorOp coassociator_rep(HalfInt j1, HalfInt j2, HalfInt j3, const EtaFunction& eta, int order) {
  const auto forward = [&](HalfInt a, HalfInt b) { return twist_rep(a, b, eta, order).forward.matrix; };
  const auto inverse = [&](HalfInt a, HalfInt b) { return twist_rep(a, b, eta, order).inverse.matrix; };

  const SeriesMatrix left_inv =
      coproduct_left_leg(j1, j2, j3, [&](HalfInt j) { return inverse(j, j3); }, order);
  const SeriesMatrix right_fwd =
      coproduct_right_leg(j1, j2, j3, [&](HalfInt j) { return forward(j1, j); }, order);
  const SeriesMatrix f12_inv = kron(inverse(j1, j2), SeriesMatrix::identity(dim(j3), order));
  const SeriesMatrix f23 = kron(SeriesMatrix::identity(dim(j1), order), forward(j2, j3));

  return {{j1, j2, j3}, left_inv * f12_inv * f23 * right_fwd};
}

double coassociator_product_residual(HalfInt j1, HalfInt j2, HalfInt j3, const EtaFunction& eta,
                                     int order) {
  const HalfInt j12 = j1 + j2, J = j12 + j3;
  const auto w1 = weights(j1), w2 = weights(j2), w3 = weights(j3);
  SeriesMatrix mu3(dim(J), dim(j1) * dim(j2) * dim(j3), order);
  Eigen::Index col = 0;
  for (HalfInt m1 : w1)
    for (HalfInt m2 : w2)
      for (HalfInt m3 : w3) {
        const HalfInt m12 = m1 + m2, M = m12 + m3;
        const double c = cg({j1, j2, j12, m1, m2, m12}) * cg({j12, j3, J, m12, m3, M});
        mu3.slice(0)(weight_index(J, M), col++) = c;
      }
  return max_abs_diff(mu3 * coassociator_rep(j1, j2, j3, eta, order).matrix, mu3);
}

}  // namespace qstar
