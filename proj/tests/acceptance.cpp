// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qstar/cgc.hpp"
#include "qstar/cli.hpp"
#include "qstar/qplane.hpp"
#include "qstar/spacetime4d.hpp"
#include "qstar/twist.hpp"

using namespace qstar;

namespace {

constexpr int kOrder = 6;

std::vector<HalfInt> spins_to(int twice_max) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= twice_max; ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::vector<HalfInt> weights_of(HalfInt j) {
  std::vector<HalfInt> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

PlaneElement monomial(int a, int b, int order) {
  PlanePolynomial p;
  p.emplace(std::pair{a, b}, HSeries::constant(1.0, order));
  return from_polynomial(p, false, order);
}

std::vector<PlaneElement> monomials_up_to(int degree, int order) {
  std::vector<PlaneElement> out;
  for (int d = 0; d <= degree; ++d)
    for (int b = 0; b <= d; ++b) out.push_back(monomial(d - b, b, order));
  return out;
}

std::vector<PlaneElement> basis_up_to(int twice_max, int order) {
  std::vector<PlaneElement> out;
  for (HalfInt j : spins_to(twice_max))
    for (HalfInt m : weights_of(j)) out.push_back(PlaneElement::basis(j, m, order));
  return out;
}

struct Check {
  std::string label;
  double value;
  double bound;
  bool above = false;  // negative controls must exceed the bound

  bool pass() const { return above ? value > bound : value < bound; }
};

struct Criterion {
  std::string name;
  std::function<std::vector<Check>()> run;
};

// Both orthogonality sums of the q-CG coefficients for one pair of spins.
double qcg_orthogonality(HalfInt j1, HalfInt j2) {
  const auto js = coupled_spins(j1, j2);
  double worst = 0.0;
  auto coefficient = [&](HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
    const CGQuery q{j1, j2, j, m1, m2, m};
    return cg_allowed(q) ? qcg(q, kOrder) : HSeries(kOrder);
  };
  for (HalfInt m1 : weights_of(j1))
    for (HalfInt m2 : weights_of(j2))
      for (HalfInt n1 : weights_of(j1))
        for (HalfInt n2 : weights_of(j2)) {
          if (m1 + m2 != n1 + n2) continue;
          HSeries sum(kOrder);
          for (HalfInt j : js)
            if (std::abs((m1 + m2).value()) <= j.value())
              sum += coefficient(j, m1, m2, m1 + m2) * coefficient(j, n1, n2, m1 + m2);
          worst = std::max(worst, (sum - (m1 == n1 && m2 == n2 ? 1.0 : 0.0)).max_abs());
        }
  for (HalfInt j : js)
    for (HalfInt jp : js)
      for (HalfInt m : weights_of(j)) {
        HSeries sum(kOrder);
        for (HalfInt m1 : weights_of(j1))
          for (HalfInt m2 : weights_of(j2))
            if (m1 + m2 == m && std::abs(m.value()) <= jp.value())
              sum += coefficient(j, m1, m2, m) * coefficient(jp, m1, m2, m);
        worst = std::max(worst, (sum - (j == jp ? 1.0 : 0.0)).max_abs());
      }
  return worst;
}

std::vector<Check> ac1() {
  double worst = 0.0;
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4)) worst = std::max(worst, qcg_orthogonality(j1, j2));
  return {{"orthogonality, j1, j2 <= 2", worst, 1e-9}};
}

std::vector<Check> ac2() {
  double worst = 0.0;
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3)) {
      const TwistRep tw = twist_rep(j1, j2, EtaFunction::one(), kOrder);
      for (Generator g : {Generator::E, Generator::F, Generator::K}) worst = std::max(worst, verify_intertwiner(tw, g));
    }
  return {{"F D(g) F^-1 vs deformed coproduct, j1, j2 <= 3/2", worst, 1e-9}};
}

std::vector<Check> ac3() {
  double worst = 0.0;
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3))
      for (HalfInt m1 : weights_of(j1))
        for (HalfInt m2 : weights_of(j2)) {
          const PlaneElement s = star(PlaneElement::basis(j1, m1, kOrder), PlaneElement::basis(j2, m2, kOrder));
          const HSeries c = qcg({j1, j2, j1 + j2, m1, m2, m1 + m2}, kOrder);
          worst = std::max(worst, max_abs_diff(s, c * PlaneElement::basis(j1 + j2, m1 + m2, kOrder)));
        }
  const PlaneElement x = PlaneElement::x(kOrder), y = PlaneElement::y(kOrder);
  const double rel = max_abs_diff(star(x, y), q_power(1.0, kOrder) * star(y, x));
  return {{"star(T, T) vs qcg T, j1, j2 <= 3/2", worst, 1e-9}, {"x*y - q y*x", rel, 1e-9}};
}

std::vector<Check> ac4() {
  const auto mons = monomials_up_to(3, kOrder);
  const EtaFunction perturbed = eta_by_name("perturbed");
  double worst = 0.0, control = 0.0;
  for (const auto& a : mons)
    for (const auto& b : mons)
      for (const auto& c : mons) {
        worst = std::max(worst, verify_associativity(a, b, c));
        control = std::max(control, verify_associativity(a, b, c, perturbed));
      }
  return {{"associator, 1000 monomial triples of degree <= 3", worst, 1e-9},
          {"perturbed eta associator (must exceed)", control, 1e-3, true}};
}

std::vector<Check> ac5() {
  const auto basis = basis_up_to(3, kOrder);
  double worst = 0.0;
  for (Generator g : {Generator::E, Generator::F, Generator::K})
    for (const auto& a : basis)
      for (const auto& b : basis) worst = std::max(worst, verify_covariance(g, a, b));
  return {{"covariance, E F K on T-basis pairs, j1, j2 <= 3/2", worst, 1e-9}};
}

std::vector<Check> ac6() {
  const auto basis = basis_up_to(4, kOrder);
  double worst = 0.0;
  for (const auto& a : basis)
    for (const auto& b : basis) worst = std::max(worst, max_abs_diff(mu_deformed(a, b), mu_deformed_by_normal_ordering(a, b)));
  return {{"q-CG product vs normal ordering, j1, j2 <= 2", worst, 1e-9}};
}

std::vector<Check> ac7() {
  double inter = 0.0;
  for (HalfInt j1 : spins_to(2))
    for (HalfInt j2 : spins_to(2))
      for (Generator g : {Generator::E, Generator::F, Generator::K})
        inter = std::max(inter, r_intertwining_residual(j1, j2, g, kOrder));
  const double ybe = yang_baxter_residual(half(1), half(1), half(1), kOrder);
  return {{"R intertwining, spins <= 1", inter, 1e-9}, {"Yang-Baxter on (1/2)^3", ybe, 1e-9}};
}

std::vector<Check> ac8() {
  const auto mons = monomials_up_to(2, kOrder);
  double factor = 0.0;
  for (const auto& a : mons)
    for (const auto& ap : mons)
      for (const auto& b : mons)
        for (const auto& bp : mons)
          factor = std::max(factor, max_abs_diff(star4(FourElement::tensor(a, ap), FourElement::tensor(b, bp), Variant::Euclidean),
                                                 FourElement::tensor(star(a, b), star(ap, bp))));
  const auto c = coordinate_functions(4);
  double assoc = 0.0;
  for (const auto& a : c)
    for (const auto& b : c)
      for (const auto& z : c) assoc = std::max(assoc, verify_associativity4(a, b, z, Variant::Minkowski));
  return {{"euclidean star4 vs plane star (x) plane star, degree <= 2", factor, 1e-9},
          {"minkowski associator on coordinate triples, order 4", assoc, 1e-9}};
}

std::vector<Check> ac9() {
  double q = 0.0;
  for (HalfInt j1 : spins_to(4))
    for (HalfInt j2 : spins_to(4))
      for (HalfInt j : coupled_spins(j1, j2))
        for (HalfInt m1 : weights_of(j1))
          for (HalfInt m2 : weights_of(j2)) {
            const CGQuery query{j1, j2, j, m1, m2, m1 + m2};
            if (cg_allowed(query)) q = std::max(q, std::abs(qcg(query, kOrder)[0] - cg(query)));
          }

  auto identity_gap = [](const SeriesMatrix& m) {
    const Eigen::MatrixXd c = m.constant_term();
    return (c - Eigen::MatrixXd::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff();
  };
  double tw = 0.0, r = 0.0;
  for (HalfInt j1 : spins_to(3))
    for (HalfInt j2 : spins_to(3)) {
      const TwistRep t = twist_rep(j1, j2, EtaFunction::one(), kOrder);
      tw = std::max({tw, identity_gap(t.forward.matrix), identity_gap(t.inverse.matrix)});
      if (j1.twice() <= 2 && j2.twice() <= 2) r = std::max(r, identity_gap(r_matrix_rep(j1, j2, kOrder).matrix.matrix));
    }

  const auto basis = basis_up_to(3, kOrder);
  double s = 0.0;
  for (const auto& a : basis)
    for (const auto& b : basis) s = std::max(s, max_abs_diff(star(a, b).slice(0), mu_classical(a, b).slice(0)));

  std::vector<FourElement> fours;
  for (const auto& a : monomials_up_to(1, kOrder))
    for (const auto& b : monomials_up_to(1, kOrder)) fours.push_back(FourElement::tensor(a, b));
  double s4 = 0.0;
  for (Variant v : {Variant::Euclidean, Variant::Minkowski})
    for (const auto& a : fours)
      for (const auto& b : fours) s4 = std::max(s4, max_abs_diff(star4(a, b, v).slice(0), mu4_classical(a, b).slice(0)));

  return {{"qcg vs cg at hbar^0, j1, j2 <= 2", q, 1e-12},
          {"twist at hbar^0 vs identity, j1, j2 <= 3/2", tw, 1e-12},
          {"R at hbar^0 vs identity, spins <= 1", r, 1e-12},
          {"star at hbar^0 vs commutative product", s, 1e-12},
          {"star4 at hbar^0 vs commutative product, both variants", s4, 1e-12}};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 q-CG orthogonality", ac1},       {"AC2 twist intertwining", ac2},
      {"AC3 star on the T-basis", ac3},      {"AC4 associativity", ac4},
      {"AC5 covariance", ac5},               {"AC6 dual-route product", ac6},
      {"AC7 R-matrix", ac7},                 {"AC8 four-space realization", ac8},
      {"AC9 classical limits", ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass(); });
    std::string detail;
    for (const auto& k : checks) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s%s = %.3g (%s %.0e)", detail.empty() ? "" : "; ", k.label.c_str(), k.value,
                    k.above ? ">" : "<", k.bound);
      detail += buf;
    }
    if (!error.empty()) detail = "error: " + error;
    std::printf("[%s] %s: %s [%.2fs]\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
