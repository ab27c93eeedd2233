#include "qstar/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "qstar/json_io.hpp"
#include "qstar/polynomial.hpp"
#include "qstar/verify.hpp"

namespace qstar {

EtaFunction eta_by_name(std::string_view name) {
  if (name == "one") return EtaFunction::one();
  if (name == "perturbed") {
    const int k = 16;
    return EtaFunction::with_value(EtaFunction::one(), HalfInt(1), half(1), half(3),
                                   HSeries::constant(1.0, k) + HSeries::hbar(k));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown eta '" + std::string(name) + "'");
}

namespace {

int default_order() {
  const char* env = std::getenv("QSTAR_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64)
    throw Error(ErrorKind::InvalidArgument, std::string("QSTAR_ORDER='") + env + "' is not an order");
  return static_cast<int>(v);
}

struct QcgArgs {
  std::string j1, j2, format = "csv";
  bool deformed = false;
  int order = kDefaultOrder;
};

int cmd_qcg(const QcgArgs& a, std::ostream& out) {
  const HalfInt j1 = HalfInt::parse(a.j1), j2 = HalfInt::parse(a.j2);
  if (j1.twice() < 0 || j2.twice() < 0) throw Error(ErrorKind::InvalidArgument, "spins must be >= 0");
  Json entries = Json::array();
  std::vector<std::pair<CGQuery, HSeries>> rows;
  for (HalfInt j : coupled_spins(j1, j2))
    for (HalfInt m : weights(j))
      for (HalfInt m1 : weights(j1)) {
        const HalfInt m2 = m - m1;
        if (std::abs(m2.twice()) > j2.twice()) continue;
        const CGQuery q{j1, j2, j, m1, m2, m};
        rows.emplace_back(q, a.deformed ? qcg(q, a.order) : HSeries::constant(cg(q), a.order));
      }
  if (a.format == "json") {
    for (const auto& [q, c] : rows)
      entries.push_back({{"j", q.j.str()}, {"m1", q.m1.str()}, {"m2", q.m2.str()}, {"m", q.m.str()},
                         {"coeff", to_json(c)}});
    out << Json{{"j1", j1.str()}, {"j2", j2.str()}, {"deformed", a.deformed}, {"order", a.order},
                {"entries", entries}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "j1,j2,j,m1,m2,m";
  for (int k = 0; k <= a.order; ++k) out << ",c" << k;
  out << '\n' << std::setprecision(17);
  for (const auto& [q, c] : rows) {
    out << q.j1.str() << ',' << q.j2.str() << ',' << q.j.str() << ',' << q.m1.str() << ','
        << q.m2.str() << ',' << q.m.str();
    for (double v : c.coeffs()) out << ',' << v;
    out << '\n';
  }
  return kExitOk;
}

struct TwistArgs {
  std::string j1, j2, eta = "one";
  int order = kDefaultOrder;
};

int cmd_twist(const TwistArgs& a, std::ostream& out) {
  const HalfInt j1 = HalfInt::parse(a.j1), j2 = HalfInt::parse(a.j2);
  if (j1.twice() < 0 || j2.twice() < 0) throw Error(ErrorKind::InvalidArgument, "spins must be >= 0");
  out << to_json(twist_rep(j1, j2, eta_by_name(a.eta), a.order)).dump(2) << '\n';
  return kExitOk;
}

struct StarArgs {
  std::string space = "plane", expr, eta = "one";
  int order = kDefaultOrder;
  std::optional<int> bidiff;
  bool text = false;
};

template <typename Element>
Json expansion(const Element& e, int from, int to) {
  Json lines = Json::array();
  for (int k = from; k <= to; ++k) lines.push_back({{"hbar", k}, {"terms", render(e.slice(k))}});
  return lines;
}

int cmd_star(const StarArgs& a, std::ostream& out) {
  const Space space = parse_space(a.space);
  const EtaFunction eta = eta_by_name(a.eta);
  const auto factors = parse_star_expression(a.expr, space);
  if (a.bidiff && (*a.bidiff < 0 || *a.bidiff > a.order))
    throw Error(ErrorKind::OrderExceeded,
                "--bidiff " + std::to_string(*a.bidiff) + " needs --order >= " + std::to_string(*a.bidiff));

  Json result;
  Json lines;
  auto finish = [&](const auto& product) {
    if (a.bidiff) {
      const auto slice = product.slice(*a.bidiff);
      result = to_json(slice);
      lines = expansion(product, *a.bidiff, *a.bidiff);
    } else {
      result = to_json(product);
      lines = expansion(product, 0, product.order());
    }
  };
  if (space == Space::Plane) {
    PlaneElement p = to_plane_element(factors.front(), a.order);
    for (std::size_t i = 1; i < factors.size(); ++i) p = star(p, to_plane_element(factors[i], a.order), eta);
    finish(p);
  } else {
    const Variant v = space == Space::Euclid ? Variant::Euclidean : Variant::Minkowski;
    FourElement p = to_four_element(factors.front(), a.order);
    for (std::size_t i = 1; i < factors.size(); ++i) p = star4(p, to_four_element(factors[i], a.order), v, eta);
    finish(p);
  }

  if (a.text) {
    for (const auto& l : lines) out << "hbar^" << l["hbar"].get<int>() << ": " << l["terms"].get<std::string>() << '\n';
    return kExitOk;
  }
  Json doc{{"space", to_string(space)}, {"expr", a.expr}, {"eta", a.eta}, {"order", a.order}};
  if (a.bidiff) doc["bidiff"] = *a.bidiff;
  doc["result"] = result;
  doc["expansion"] = lines;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all", max_spin = "3/2", report;
  int order = kDefaultOrder;
  double tol = 1e-9;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.max_spin = HalfInt::parse(a.max_spin);
  opts.order = a.order;
  opts.tol = a.tol;
  opts.threads = a.threads;
  const VerifyReport r = run_verify(a.suite, opts);
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write report to '" + a.report + "'");
    f << to_json(r).dump(2) << '\n';
  }
  for (const auto& c : r.cases)
    if (!c.pass) out << "FAIL " << c.id << " residual=" << c.residual << " tol=" << c.tolerance << '\n';
  out << "suite=" << r.suite << " passed=" << r.passed << "/" << r.total
      << " max_residual=" << std::setprecision(3) << r.max_residual << '\n';
  return r.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twist star products for the quantum plane, quantum Euclidean 4-space and quantum Minkowski space"};
  app.require_subcommand(1);

  int order = kDefaultOrder;
  try {
    order = default_order();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  QcgArgs qa;
  qa.order = order;
  auto* qcg_cmd = app.add_subcommand("qcg", "Clebsch-Gordan table for a pair of spins");
  qcg_cmd->add_option("--j1", qa.j1, "first spin, e.g. 1 or 3/2")->required();
  qcg_cmd->add_option("--j2", qa.j2, "second spin")->required();
  qcg_cmd->add_flag("--deformed", qa.deformed, "q-deformed coefficients");
  qcg_cmd->add_option("--order", qa.order, "truncation order")->check(CLI::NonNegativeNumber);
  qcg_cmd->add_option("--format", qa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  TwistArgs ta;
  ta.order = order;
  auto* twist_cmd = app.add_subcommand("twist", "forward and inverse twist matrices as JSON");
  twist_cmd->add_option("--j1", ta.j1)->required();
  twist_cmd->add_option("--j2", ta.j2)->required();
  twist_cmd->add_option("--order", ta.order)->check(CLI::NonNegativeNumber);
  twist_cmd->add_option("--eta", ta.eta)->check(CLI::IsMember({"one", "perturbed"}));

  StarArgs sa;
  sa.order = order;
  auto* star_cmd = app.add_subcommand("star", "star product of polynomials");
  star_cmd->add_option("--space", sa.space)->check(CLI::IsMember({"plane", "euclid", "minkowski"}));
  star_cmd->add_option("--order", sa.order)->check(CLI::NonNegativeNumber);
  star_cmd->add_option("--eta", sa.eta)->check(CLI::IsMember({"one", "perturbed"}));
  star_cmd->add_option("--expr", sa.expr, "e.g. \"x * y\"")->required();
  star_cmd->add_option("--bidiff", sa.bidiff, "emit only the hbar^k term B_k");
  star_cmd->add_flag("--text", sa.text, "print the monomial expansion only");

  VerifyArgs va;
  va.order = order;
  auto* verify_cmd = app.add_subcommand("verify", "run verification grids");
  verify_cmd->add_option("--suite", va.suite)->check(CLI::IsMember(verify_suites()));
  verify_cmd->add_option("--max-spin", va.max_spin);
  verify_cmd->add_option("--order", va.order)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", va.tol)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--report", va.report, "write the JSON report to this path");
  verify_cmd->add_option("--threads", va.threads);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*qcg_cmd) return cmd_qcg(qa, out);
    if (*twist_cmd) return cmd_twist(ta, out);
    if (*star_cmd) return cmd_star(sa, out);
    return cmd_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::UnsupportedGenerator ? kExitUnsupported : kExitUsage;
  }
}

}  // namespace qstar
