#include "qstar/hseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace qstar {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUnitSeries: return "NonUnitSeries";
    case ErrorKind::NonPositiveLeadingTerm: return "NonPositiveLeadingTerm";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MixedFamily: return "MixedFamily";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::EtaUndefined: return "EtaUndefined";
    case ErrorKind::NonInvertibleEta: return "NonInvertibleEta";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedGenerator: return "UnsupportedGenerator";
  }
  return "Unknown";
}

namespace {

constexpr double kUnitTolerance = 1e-12;

void check_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
}

}  // namespace

HSeries::HSeries(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

HSeries::HSeries(int order, std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, 0.0);
}

HSeries::HSeries(int order, std::initializer_list<double> coeffs)
    : HSeries(order, std::vector<double>(coeffs)) {}

HSeries HSeries::constant(double value, int order) {
  HSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

HSeries HSeries::hbar(int order) {
  HSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

HSeries HSeries::truncated(int order) const {
  return HSeries(order, std::vector<double>(coeffs_.begin(),
                                            coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                                  order + 1, std::ssize(coeffs_))));
}

bool HSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double HSeries::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double HSeries::evaluate(double hbar) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * hbar + *it;
  return acc;
}

HSeries& HSeries::operator+=(const HSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

HSeries& HSeries::operator*=(const HSeries& rhs) { return *this = *this * rhs; }

HSeries& HSeries::operator*=(double s) noexcept {
  for (double& c : coeffs_) c *= s;
  return *this;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  const int order = std::min(a.order(), b.order());
  HSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0.0) continue;
    for (int j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HSeries HSeries::operator-() const {
  HSeries out = *this;
  out *= -1.0;
  return out;
}

HSeries invert(const HSeries& a) {
  const double a0 = a.constant_term();
  if (std::abs(a0) < kUnitTolerance) throw Error(ErrorKind::NonUnitSeries, "constant term vanishes");
  HSeries b(a.order());
  b[0] = 1.0 / a0;
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc / a0;
  }
  return b;
}

HSeries sqrt(const HSeries& a) {
  const double a0 = a.constant_term();
  if (!(a0 > 0.0)) throw Error(ErrorKind::NonPositiveLeadingTerm, "constant term must be positive");
  HSeries r(a.order());
  r[0] = std::sqrt(a0);
  for (int k = 1; k <= a.order(); ++k) {
    double acc = a[k];
    for (int i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

HSeries exp_nilpotent(const HSeries& a) {
  if (a.constant_term() != 0.0)
    throw Error(ErrorKind::InvalidArgument, "exp_nilpotent needs a vanishing constant term");
  // y' = a' y, solved coefficient-wise.
  HSeries y(a.order());
  y[0] = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += i * a[i] * y[k - i];
    y[k] = acc / k;
  }
  return y;
}

double max_abs_diff(const HSeries& a, const HSeries& b) noexcept {
  const int order = std::min(a.order(), b.order());
  double m = 0.0;
  for (int k = 0; k <= order; ++k) m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  return m;
}

bool approx_eq(const HSeries& a, const HSeries& b, double tol) noexcept {
  return max_abs_diff(a, b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const HSeries& s) {
  os << '[';
  for (int k = 0; k <= s.order(); ++k) os << (k ? ", " : "") << s.coeffs()[k];
  return os << ']';
}

// ---------------------------------------------------------------------------

HalfInt HalfInt::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::InvalidArgument, "malformed spin '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw fail();
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text));
  if (parse_int(text.substr(slash + 1)) != 2) throw fail();
  return from_twice(parse_int(text.substr(0, slash)));
}

int HalfInt::as_int() const {
  if (!is_integer()) throw Error(ErrorKind::InvalidArgument, "half-integer " + str() + " is not integral");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

std::vector<HalfInt> weights(HalfInt j) {
  std::vector<HalfInt> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

// ---------------------------------------------------------------------------

HSeries q_power(double exponent, int order) {
  HSeries s(order);
  double term = 1.0;
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term *= exponent / (k + 1);
  }
  return s;
}

HSeries q_integer(int n, int order) {
  if (n < 0) return -q_integer(-n, order);
  HSeries s(order);
  for (int k = 0; k < n; ++k) s += q_power(n - 1 - 2 * k, order);
  return s;
}

HSeries q_factorial(int n, int order) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "q_factorial of negative argument");
  HSeries s = HSeries::constant(1.0, order);
  for (int i = 2; i <= n; ++i) s *= q_integer(i, order);
  return s;
}

HSeries gauss_binomial(int n, int k, int base_exp, int order) {
  if (n < 0 || k < 0 || k > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "gauss_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  // q-Pascal rule [n,k] = [n-1,k-1] + Q^k [n-1,k]; row holds [n', 0..n'].
  std::vector<HSeries> row{HSeries::constant(1.0, order)};
  for (int m = 1; m <= n; ++m) {
    std::vector<HSeries> next(static_cast<std::size_t>(m) + 1, HSeries(order));
    next[0] = HSeries::constant(1.0, order);
    next[m] = HSeries::constant(1.0, order);
    for (int i = 1; i < m; ++i)
      next[i] = row[i - 1] + q_power(static_cast<double>(base_exp) * i, order) * row[i];
    row = std::move(next);
  }
  return row[k];
}

double factorial(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "factorial of negative argument");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace qstar
