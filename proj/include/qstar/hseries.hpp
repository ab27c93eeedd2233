#pragma once

// Truncated formal power series in hbar with real coefficients, exact
// half-integer labels, and the q-numbers (q = e^hbar) built on them.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/error.hpp"

namespace qstar {

inline constexpr int kDefaultOrder = 6;

/// Element of R[[hbar]] truncated at hbar^order (inclusive).
///
/// Binary operations on series of different orders truncate to the smaller
/// order, so a result never claims more precision than its inputs.
class HSeries {
 public:
  /// Zero series.
  explicit HSeries(int order = kDefaultOrder);
  /// Missing coefficients are zero; coefficients beyond `order` are dropped.
  HSeries(int order, std::vector<double> coeffs);
  HSeries(int order, std::initializer_list<double> coeffs);

  static HSeries constant(double value, int order = kDefaultOrder);
  static HSeries hbar(int order = kDefaultOrder);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  double& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  double constant_term() const noexcept { return coeffs_.front(); }

  HSeries truncated(int order) const;
  bool is_zero() const noexcept;
  double max_abs() const noexcept;

  /// Polynomial evaluation of the truncated series at a numeric hbar.
  double evaluate(double hbar) const noexcept;

  HSeries& operator+=(const HSeries& rhs);
  HSeries& operator-=(const HSeries& rhs);
  HSeries& operator*=(const HSeries& rhs);
  HSeries& operator*=(double s) noexcept;

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend HSeries operator*(HSeries a, double s) { return a *= s; }
  friend HSeries operator*(double s, HSeries a) { return a *= s; }
  friend HSeries operator+(HSeries a, double s) {
    a.coeffs_.front() += s;
    return a;
  }
  friend HSeries operator-(HSeries a, double s) {
    a.coeffs_.front() -= s;
    return a;
  }
  HSeries operator-() const;

 private:
  std::vector<double> coeffs_;
};

/// Multiplicative inverse; throws NonUnitSeries when the constant term vanishes.
HSeries invert(const HSeries& a);
/// Square root with positive constant term; throws NonPositiveLeadingTerm.
HSeries sqrt(const HSeries& a);
/// exp of a series whose constant term is zero (throws InvalidArgument otherwise).
HSeries exp_nilpotent(const HSeries& a);

/// Max over k of |a_k - b_k| up to the common order.
double max_abs_diff(const HSeries& a, const HSeries& b) noexcept;
bool approx_eq(const HSeries& a, const HSeries& b, double tol) noexcept;

std::ostream& operator<<(std::ostream& os, const HSeries& s);

/// Half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  /// Parses "n" or "n/2" (optional sign). Throws InvalidArgument.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  /// Value as an integer; requires is_integer().
  int as_int() const;

  std::string str() const;

  constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;

 private:
  int twice_ = 0;
};

constexpr HalfInt half(int numerator_over_two) { return HalfInt::from_twice(numerator_over_two); }

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Magnetic labels -j, -j+1, ..., j.
std::vector<HalfInt> weights(HalfInt j);

/// q^a = exp(a*hbar).
HSeries q_power(double exponent, int order = kDefaultOrder);
inline HSeries q_power(HalfInt exponent, int order = kDefaultOrder) {
  return q_power(exponent.value(), order);
}

/// Symmetric q-integer [n]_q = (q^n - q^-n)/(q - q^-1). Negative n gives -[|n|].
HSeries q_integer(int n, int order = kDefaultOrder);
/// [n]_q! ; throws IndexOutOfRange for n < 0.
HSeries q_factorial(int n, int order = kDefaultOrder);
/// Gauss binomial [n choose k]_Q at Q = q^base_exp.
HSeries gauss_binomial(int n, int k, int base_exp, int order = kDefaultOrder);

double factorial(int n);
double binomial(int n, int k);

}  // namespace qstar
