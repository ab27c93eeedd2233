#include "qstar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "qstar/cgc.hpp"
#include "qstar/qplane.hpp"
#include "qstar/spacetime4d.hpp"
#include "qstar/twist.hpp"

namespace qstar {

namespace {

struct Job {
  std::string id;
  Json parameters;
  double tolerance;
  std::function<double()> run;
};

using Jobs = std::vector<Job>;

std::vector<HalfInt> spins_up_to(HalfInt max_spin) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= max_spin.twice(); ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

HalfInt cap(HalfInt a, HalfInt b) { return a < b ? a : b; }

double classical_tol(const VerifyOptions& o) { return std::min(o.tol, 1e-12); }

double constant_identity_residual(const SeriesMatrix& m) {
  const auto& c = m.constant_term();
  return (c - Eigen::MatrixXd::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff();
}

Json spin_params(std::initializer_list<std::pair<const char*, HalfInt>> spins) {
  Json j = Json::object();
  for (const auto& [k, v] : spins) j[k] = v.str();
  return j;
}

std::string spin_id(std::initializer_list<HalfInt> spins) {
  std::string out;
  for (HalfInt s : spins) out += (out.empty() ? "" : ",") + s.str();
  return out;
}

// ---------------------------------------------------------------------------

void series_jobs(const VerifyOptions& o, Jobs& jobs) {
  const int order = o.order;
  std::mt19937 rng(20240917);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto random_series = [&](double c0) {
    HSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = dist(rng);
    s[0] = c0;
    return s;
  };
  for (int trial = 0; trial < 8; ++trial) {
    const HSeries a = random_series(dist(rng)), b = random_series(dist(rng)),
                  c = random_series(dist(rng)), u = random_series(1.0 + std::abs(dist(rng)));
    const std::string t = std::to_string(trial);
    jobs.push_back({"series/ring/" + t, {{"trial", trial}}, o.tol, [=] {
                      return std::max(max_abs_diff((a * b) * c, a * (b * c)),
                                      max_abs_diff(a * (b + c), a * b + a * c));
                    }});
    jobs.push_back({"series/invert/" + t, {{"trial", trial}}, o.tol,
                    [=] { return max_abs_diff(u * invert(u), HSeries::constant(1.0, order)); }});
    jobs.push_back({"series/sqrt/" + t, {{"trial", trial}}, o.tol, [=] {
                      const HSeries r = sqrt(u);
                      return max_abs_diff(r * r, u);
                    }});
  }
  for (int n = 0; n <= 8; ++n) {
    jobs.push_back({"series/q_integer_limit/" + std::to_string(n), {{"n", n}}, classical_tol(o),
                    [=] { return std::abs(q_integer(n, order)[0] - n); }});
    jobs.push_back({"series/q_integer_even/" + std::to_string(n), {{"n", n}}, o.tol, [=] {
                      const HSeries s = q_integer(n, order);
                      double m = 0.0;
                      for (int k = 1; k <= order; k += 2) m = std::max(m, std::abs(s[k]));
                      return m;
                    }});
    jobs.push_back({"series/q_factorial_limit/" + std::to_string(n), {{"n", n}}, classical_tol(o),
                    [=] { return std::abs(q_factorial(n, order)[0] - factorial(n)) / factorial(n); }});
    for (int k = 0; k <= n; ++k)
      {
        const std::string nk = std::to_string(n) + "," + std::to_string(k);
        const Json params{{"n", n}, {"k", k}};
        jobs.push_back({"series/gauss_binomial_limit/" + nk, params, classical_tol(o), [=] {
                          return std::abs(gauss_binomial(n, k, -2, order)[0] - binomial(n, k)) / binomial(n, k);
                        }});
        jobs.push_back({"series/gauss_binomial_symmetry/" + nk, params, o.tol, [=] {
                          return max_abs_diff(gauss_binomial(n, k, -2, order), gauss_binomial(n, n - k, -2, order));
                        }});
      }
  }
}

// ---------------------------------------------------------------------------

void cgc_jobs(const VerifyOptions& o, Jobs& jobs) {
  const int order = o.order;
  const auto spins = spins_up_to(o.max_spin);
  for (HalfInt j : spins)
    jobs.push_back({"cgc/irrep_relations/" + j.str(), spin_params({{"j", j}}), o.tol,
                    [=] { return verify_irrep_relations(j, order); }});
  for (HalfInt j1 : spins)
    for (HalfInt j2 : spins) {
      const std::string sid = spin_id({j1, j2});
      const Json params = spin_params({{"j1", j1}, {"j2", j2}});
      for (bool deformed : {true, false}) {
        const std::string kind = deformed ? "qcg" : "cg";
        jobs.push_back({"cgc/orthogonality_columns/" + kind + "/" + sid, params, o.tol, [=] {
                          const SeriesMatrix C = cg_matrix(j1, j2, deformed, order).matrix;
                          return max_abs_diff(C.transpose() * C, SeriesMatrix::identity(C.cols(), order));
                        }});
        jobs.push_back({"cgc/orthogonality_rows/" + kind + "/" + sid, params, o.tol, [=] {
                          const SeriesMatrix C = cg_matrix(j1, j2, deformed, order).matrix;
                          return max_abs_diff(C * C.transpose(), SeriesMatrix::identity(C.rows(), order));
                        }});
      }
      jobs.push_back({"cgc/classical_limit/" + sid, params, classical_tol(o), [=] {
                        const Eigen::MatrixXd q = cg_matrix(j1, j2, true, order).matrix.constant_term();
                        const Eigen::MatrixXd c = cg_matrix(j1, j2, false, order).matrix.constant_term();
                        return (q - c).cwiseAbs().maxCoeff();
                      }});
      jobs.push_back({"cgc/stretched/" + sid, params, o.tol, [=] {
                        double m = 0.0;
                        const HalfInt J = j1 + j2;
                        for (HalfInt m1 : weights(j1))
                          for (HalfInt m2 : weights(j2)) {
                            const double closed = std::sqrt(
                                binomial(j1.twice(), (j1 + m1).as_int()) *
                                binomial(j2.twice(), (j2 + m2).as_int()) /
                                binomial(J.twice(), (J + m1 + m2).as_int()));
                            m = std::max(m, std::abs(cg({j1, j2, J, m1, m2, m1 + m2}) - closed));
                          }
                        return m;
                      }});
      for (Generator g : {Generator::E, Generator::F, Generator::K, Generator::e, Generator::f,
                          Generator::h}) {
        const bool deformed = is_deformed(g);
        jobs.push_back({"cgc/intertwining/" + to_string(g) + "/" + sid, params, o.tol, [=] {
                          const SeriesMatrix C = cg_matrix(j1, j2, deformed, order).matrix;
                          return max_abs_diff(
                              C.transpose() * coproduct_rep(j1, j2, g, deformed, order).matrix * C,
                              coupled_block_rep(j1, j2, g, deformed, order));
                        }});
      }
    }
}

// ---------------------------------------------------------------------------

void twist_jobs(const VerifyOptions& o, Jobs& jobs) {
  const int order = o.order;
  const auto spins = spins_up_to(o.max_spin);
  const EtaFunction gauged = EtaFunction::gauged(EtaFunction::one(), [](HalfInt j, int k) {
    return HSeries::constant(1.0, k) + (1.0 + j.value()) * HSeries::hbar(k);
  });
  for (HalfInt j1 : spins)
    for (HalfInt j2 : spins) {
      const std::string sid = spin_id({j1, j2});
      const Json params = spin_params({{"j1", j1}, {"j2", j2}});
      for (Generator g : {Generator::E, Generator::F, Generator::K}) {
        jobs.push_back({"twist/intertwiner/" + to_string(g) + "/" + sid, params, o.tol,
                        [=] { return verify_intertwiner(twist_rep(j1, j2, EtaFunction::one(), order), g); }});
        jobs.push_back({"twist/gauge_covariance/" + to_string(g) + "/" + sid, params, o.tol,
                        [=] { return verify_intertwiner(twist_rep(j1, j2, gauged, order), g); }});
      }
      jobs.push_back({"twist/inverse/" + sid, params, o.tol,
                      [=] { return twist_rep(j1, j2, EtaFunction::one(), order).inversion_residual; }});
      jobs.push_back({"twist/classical_limit/" + sid, params, classical_tol(o), [=] {
                        return constant_identity_residual(twist_rep(j1, j2, EtaFunction::one(), order).forward.matrix);
                      }});
    }
  const auto small = spins_up_to(cap(o.max_spin, HalfInt(1)));
  for (HalfInt j1 : small)
    for (HalfInt j2 : small)
      for (HalfInt j3 : small)
        jobs.push_back({"twist/coassociator_on_products/" + spin_id({j1, j2, j3}),
                        spin_params({{"j1", j1}, {"j2", j2}, {"j3", j3}}), o.tol,
                        [=] { return coassociator_product_residual(j1, j2, j3, EtaFunction::one(), order); }});
}

// ---------------------------------------------------------------------------

std::vector<PlaneElement> plane_monomials(int max_degree, int order) {
  std::vector<PlaneElement> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int b = 0; b <= d; ++b) {
      const HalfInt j = HalfInt::from_twice(d), m = HalfInt::from_twice(2 * b - d);
      PlaneElement p(order);
      p.add(j, m, invert(t_basis_classical(j, m, order).coeff));
      out.push_back(p);
    }
  return out;
}

std::string monomial_name(int a, int b) {
  std::string s;
  if (a > 0) s += "x" + (a > 1 ? "^" + std::to_string(a) : std::string());
  if (b > 0) s += "y" + (b > 1 ? "^" + std::to_string(b) : std::string());
  return s.empty() ? "1" : s;
}

std::vector<std::string> plane_monomial_names(int max_degree) {
  std::vector<std::string> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int b = 0; b <= d; ++b) out.push_back(monomial_name(d - b, b));
  return out;
}

void plane_jobs(const VerifyOptions& o, Jobs& jobs) {
  const int order = o.order;
  const auto spins = spins_up_to(o.max_spin);
  const EtaFunction one = EtaFunction::one();
  for (HalfInt j1 : spins)
    for (HalfInt j2 : spins) {
      const std::string sid = spin_id({j1, j2});
      const Json params = spin_params({{"j1", j1}, {"j2", j2}});
      jobs.push_back({"plane/star_equals_mu/" + sid, params, o.tol, [=] {
                        double m = 0.0;
                        for (HalfInt m1 : weights(j1))
                          for (HalfInt m2 : weights(j2)) {
                            const auto a = PlaneElement::basis(j1, m1, order), b = PlaneElement::basis(j2, m2, order);
                            m = std::max(m, max_abs_diff(star(a, b, one), mu_deformed(a, b)));
                          }
                        return m;
                      }});
      jobs.push_back({"plane/dual_route/" + sid, params, o.tol, [=] {
                        double m = 0.0;
                        for (HalfInt m1 : weights(j1))
                          for (HalfInt m2 : weights(j2)) {
                            const auto a = PlaneElement::basis(j1, m1, order), b = PlaneElement::basis(j2, m2, order);
                            m = std::max(m, max_abs_diff(mu_deformed(a, b), mu_deformed_by_normal_ordering(a, b)));
                            m = std::max(m, max_abs_diff(mu_classical(a, b), mu_classical_by_monomials(a, b)));
                          }
                        return m;
                      }});
      jobs.push_back({"plane/classical_limit/" + sid, params, classical_tol(o), [=] {
                        double m = 0.0;
                        for (HalfInt m1 : weights(j1))
                          for (HalfInt m2 : weights(j2)) {
                            const auto a = PlaneElement::basis(j1, m1, order), b = PlaneElement::basis(j2, m2, order);
                            m = std::max(m, max_abs_diff(star(a, b, one).slice(0), mu_classical(a, b).slice(0)));
                          }
                        return m;
                      }});
      for (Generator g : {Generator::E, Generator::F, Generator::K})
        jobs.push_back({"plane/covariance/" + to_string(g) + "/" + sid, params, o.tol, [=] {
                          double m = 0.0;
                          for (HalfInt m1 : weights(j1))
                            for (HalfInt m2 : weights(j2))
                              m = std::max(m, verify_covariance(g, PlaneElement::basis(j1, m1, order),
                                                                PlaneElement::basis(j2, m2, order), one));
                          return m;
                        }});
    }
  const int degree = o.max_spin.twice();
  const auto names = plane_monomial_names(degree);
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < names.size(); ++b)
      jobs.push_back({"plane/associativity/" + names[a] + "," + names[b], {{"a", names[a]}, {"b", names[b]}},
                      o.tol, [=] {
                        const auto mons = plane_monomials(degree, order);
                        double m = 0.0;
                        for (const auto& c : mons)
                          m = std::max(m, verify_associativity(mons[a], mons[b], c, one));
                        return m;
                      }});
}

// ---------------------------------------------------------------------------

void spacetime_jobs(const VerifyOptions& o, Jobs& jobs) {
  const int order = o.order;
  const auto small = spins_up_to(cap(o.max_spin, HalfInt(1)));
  for (HalfInt j1 : small)
    for (HalfInt j2 : small) {
      const std::string sid = spin_id({j1, j2});
      const Json params = spin_params({{"j1", j1}, {"j2", j2}});
      for (Generator g : {Generator::E, Generator::F, Generator::K})
        jobs.push_back({"spacetime/r_intertwining/" + to_string(g) + "/" + sid, params, o.tol,
                        [=] { return r_intertwining_residual(j1, j2, g, order); }});
      jobs.push_back({"spacetime/r_inverse/" + sid, params, o.tol, [=] {
                        const auto R = r_matrix_rep(j1, j2, order);
                        return max_abs_diff(R.matrix.matrix * R.inverse.matrix,
                                            SeriesMatrix::identity(R.matrix.dim(), order));
                      }});
      jobs.push_back({"spacetime/r_classical_limit/" + sid, params, classical_tol(o),
                      [=] { return constant_identity_residual(r_matrix_rep(j1, j2, order).matrix.matrix); }});
    }
  for (HalfInt j1 : small)
    for (HalfInt j2 : small)
      for (HalfInt j3 : small)
        jobs.push_back({"spacetime/yang_baxter/" + spin_id({j1, j2, j3}),
                        spin_params({{"j1", j1}, {"j2", j2}, {"j3", j3}}), o.tol,
                        [=] { return yang_baxter_residual(j1, j2, j3, order); }});

  const auto quarter = spins_up_to(cap(o.max_spin, half(1)));
  for (Variant v : {Variant::Euclidean, Variant::Minkowski})
    for (HalfInt a : quarter)
      for (HalfInt b : quarter)
        for (HalfInt c : quarter)
          for (HalfInt d : quarter) {
            const Spins4 s{a, b, c, d};
            jobs.push_back({"spacetime/composite_twist/" + to_string(v) + "/" + spin_id({a, b, c, d}),
                            spin_params({{"j1", a}, {"j2", b}, {"j3", c}, {"j4", d}}), o.tol, [=] {
                              const auto F = composite_twist(v, s, EtaFunction::one(), order);
                              const auto Finv = composite_twist_inverse(v, s, EtaFunction::one(), order);
                              return std::max(
                                  constant_identity_residual(F.matrix),
                                  max_abs_diff(F.matrix * Finv.matrix, SeriesMatrix::identity(F.dim(), order)));
                            }});
          }

  // Euclidean factorization on decomposable monomials of degree <= 2 per factor.
  const int degree = std::min(2, o.max_spin.twice());
  const auto names = plane_monomial_names(degree);
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t ap = 0; ap < names.size(); ++ap)
      jobs.push_back({"spacetime/euclid_factorization/" + names[a] + "(x)" + names[ap],
                      {{"a", names[a]}, {"a'", names[ap]}}, o.tol, [=] {
                        const auto mons = plane_monomials(degree, order);
                        double m = 0.0;
                        for (const auto& b : mons)
                          for (const auto& bp : mons) {
                            const FourElement lhs = star4(FourElement::tensor(mons[a], mons[ap]),
                                                          FourElement::tensor(b, bp), Variant::Euclidean);
                            const FourElement rhs = FourElement::tensor(star(mons[a], b, EtaFunction::one()),
                                                                        star(mons[ap], bp, EtaFunction::one()));
                            m = std::max(m, max_abs_diff(lhs, rhs));
                          }
                        return m;
                      }});

  const int assoc_order = std::min(order, 4);
  const char* coord_names[] = {"x1", "y1", "x2", "y2"};
  for (Variant v : {Variant::Euclidean, Variant::Minkowski})
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const std::string pid = std::string(coord_names[a]) + "," + coord_names[b];
        jobs.push_back({"spacetime/associativity/" + to_string(v) + "/" + pid,
                        {{"a", coord_names[a]}, {"b", coord_names[b]}, {"order", assoc_order}}, o.tol, [=] {
                          const auto c = coordinate_functions(assoc_order);
                          double m = 0.0;
                          for (const auto& z : c) m = std::max(m, verify_associativity4(c[a], c[b], z, v));
                          return m;
                        }});
        jobs.push_back({"spacetime/classical_limit/" + to_string(v) + "/" + pid,
                        {{"a", coord_names[a]}, {"b", coord_names[b]}}, classical_tol(o), [=] {
                          const auto c = coordinate_functions(order);
                          const FourElement ab = star4(c[a], c[b], v), ba = star4(c[b], c[a], v);
                          return std::max(max_abs_diff(ab.slice(0), ba.slice(0)),
                                          max_abs_diff(ab.slice(0), mu4_classical(c[a], c[b]).slice(0)));
                        }});
      }

  for (LegCopy copy : {LegCopy::Left, LegCopy::Right})
    for (Generator g : {Generator::E, Generator::F, Generator::K})
      for (int a = 0; a < 4; ++a) {
        const std::string cid = copy == LegCopy::Left ? "left" : "right";
        jobs.push_back({"spacetime/covariance/" + cid + "/" + to_string(g) + "/" + coord_names[a],
                        {{"copy", cid}, {"a", coord_names[a]}}, o.tol, [=] {
                          const auto c = coordinate_functions(order);
                          double m = 0.0;
                          for (const auto& b : c) m = std::max(m, verify_covariance4(g, copy, c[a], b));
                          return m;
                        }});
      }
}

std::vector<VerifyCase> execute(Jobs& jobs, unsigned threads) {
  std::vector<VerifyCase> cases(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      double r;
      try {
        r = jobs[i].run();
      } catch (const std::exception&) {
        r = std::numeric_limits<double>::infinity();
      }
      cases[i] = {jobs[i].id, jobs[i].parameters, r, jobs[i].tolerance, r <= jobs[i].tolerance};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return cases;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"series", "cgc", "twist", "plane", "spacetime", "all"};
  return names;
}

VerifyReport run_verify(std::string_view suite, const VerifyOptions& options) {
  if (options.order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  if (options.max_spin.twice() < 0) throw Error(ErrorKind::InvalidArgument, "negative max spin");
  Jobs jobs;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    known = known || suite == name;
    return all || suite == name;
  };
  if (want("series")) series_jobs(options, jobs);
  if (want("cgc")) cgc_jobs(options, jobs);
  if (want("twist")) twist_jobs(options, jobs);
  if (want("plane")) plane_jobs(options, jobs);
  if (want("spacetime")) spacetime_jobs(options, jobs);
  if (!known) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(suite) + "'");

  VerifyReport report;
  report.suite = std::string(suite);
  report.cases = execute(jobs, options.threads);
  std::sort(report.cases.begin(), report.cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  report.total = report.cases.size();
  for (const auto& c : report.cases) {
    report.passed += c.pass ? 1 : 0;
    report.max_residual = std::max(report.max_residual, c.residual);
  }
  return report;
}

Json to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"id", c.id},
                     {"parameters", c.parameters},
                     {"residual", std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr)},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
  return {{"suite", r.suite},
          {"cases", cases},
          {"summary",
           {{"total", r.total},
            {"passed", r.passed},
            {"max_residual", std::isfinite(r.max_residual) ? Json(r.max_residual) : Json(nullptr)}}}};
}

VerifyReport report_from_json(const Json& j) {
  VerifyReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("cases")) {
    const double residual = c.at("residual").is_null() ? std::numeric_limits<double>::infinity()
                                                       : c.at("residual").get<double>();
    r.cases.push_back({c.at("id").get<std::string>(), c.at("parameters"), residual,
                       c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
  }
  const auto& s = j.at("summary");
  r.total = s.at("total").get<std::size_t>();
  r.passed = s.at("passed").get<std::size_t>();
  r.max_residual = s.at("max_residual").is_null() ? std::numeric_limits<double>::infinity()
                                                  : s.at("max_residual").get<double>();
  return r;
}

}  // namespace qstar
