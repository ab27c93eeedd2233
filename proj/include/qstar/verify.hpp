#pragma once

// Verification grids over the library's properties, with JSON reports.

#include <string>
#include <string_view>
#include <vector>

#include "qstar/json_io.hpp"

namespace qstar {

struct VerifyCase {
  std::string id;
  Json parameters = Json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;  // sorted by id
  std::size_t total = 0;
  std::size_t passed = 0;
  double max_residual = 0.0;

  bool ok() const noexcept { return passed == total; }
};

struct VerifyOptions {
  HalfInt max_spin = half(3);
  int order = kDefaultOrder;
  double tol = 1e-9;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Suites: series, cgc, twist, plane, spacetime, all. Throws InvalidArgument otherwise.
VerifyReport run_verify(std::string_view suite, const VerifyOptions& options = {});

const std::vector<std::string>& verify_suites();

Json to_json(const VerifyReport& r);
VerifyReport report_from_json(const Json& j);

}  // namespace qstar
