#pragma once

#include <string>

namespace qbound {

/// Nonnegative scalar stored as a base-10 exponent.
///
/// The bound coefficients handled here reach magnitudes around 10^450,
/// far outside double range, so every formula is evaluated in exponent
/// space and only converted back to a plain double (or clamped to a
/// probability) at the edges.  Negative values are deliberately not
/// representable: every quantity in this library is a bound, a moment,
/// or a probability, and a negative intermediate is a formula bug.
class LogScalar {
 public:
  /// Zero.
  LogScalar() = default;

  static LogScalar zero() { return LogScalar{}; }

  /// Positive value 10^e.
  static LogScalar from_exp10(double e);

  /// Exact representation of a plain value.  Throws std::invalid_argument
  /// for negative or non-finite input.
  static LogScalar from_value(double v);

  bool is_zero() const { return !positive_; }

  /// log10 of the magnitude.  Throws std::logic_error on zero, where the
  /// exponent is undefined.
  double exp10() const;

  /// Plain double; overflows to +inf beyond ~10^308.
  double to_real() const;

  /// min(1, value).  Returns exactly 1 whenever exp10 >= 0.
  double to_probability() const;

  /// this^e.  zero^positive is zero; zero^nonpositive throws
  /// std::domain_error.
  LogScalar pow(double e) const;

  friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
  /// Throws std::domain_error when b is zero.
  friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
  /// Stable log-sum; differences beyond 40 decades collapse to the max.
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b);

  LogScalar& operator*=(const LogScalar& o) { return *this = *this * o; }
  LogScalar& operator/=(const LogScalar& o) { return *this = *this / o; }
  LogScalar& operator+=(const LogScalar& o) { return *this = *this + o; }

  // Magnitude order.
  friend bool operator<(const LogScalar& a, const LogScalar& b);
  friend bool operator>(const LogScalar& a, const LogScalar& b) { return b < a; }
  friend bool operator<=(const LogScalar& a, const LogScalar& b) { return !(b < a); }
  friend bool operator>=(const LogScalar& a, const LogScalar& b) { return !(a < b); }

  /// "10^{E}" with four decimals of E; plain decimal when |E| <= 15.
  std::string str() const;

 private:
  bool positive_ = false;
  double exp10_ = 0.0;
};

enum class Combine { mul, div, add };

/// Named-op form of the three arithmetic combinations.
LogScalar combine(const LogScalar& a, const LogScalar& b, Combine op);

}  // namespace qbound
