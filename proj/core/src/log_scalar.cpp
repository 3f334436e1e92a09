#include "qbound/log_scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qbound {

namespace {
constexpr double kAddCutoffDecades = 40.0;
}

LogScalar LogScalar::from_exp10(double e) {
  if (!std::isfinite(e)) throw std::invalid_argument("LogScalar: exponent must be finite");
  LogScalar s;
  s.positive_ = true;
  s.exp10_ = e;
  return s;
}

LogScalar LogScalar::from_value(double v) {
  if (!std::isfinite(v) || v < 0.0)
    throw std::invalid_argument("LogScalar: value must be finite and nonnegative");
  if (v == 0.0) return zero();
  return from_exp10(std::log10(v));
}

double LogScalar::exp10() const {
  if (!positive_) throw std::logic_error("LogScalar: exponent of zero is undefined");
  return exp10_;
}

double LogScalar::to_real() const {
  if (!positive_) return 0.0;
  return std::pow(10.0, exp10_);
}

double LogScalar::to_probability() const {
  if (!positive_) return 0.0;
  if (exp10_ >= 0.0) return 1.0;
  return std::pow(10.0, exp10_);
}

LogScalar LogScalar::pow(double e) const {
  if (!positive_) {
    if (e > 0.0) return zero();
    throw std::domain_error("LogScalar: zero raised to a nonpositive power");
  }
  return from_exp10(exp10_ * e);
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.is_zero() || b.is_zero()) return LogScalar::zero();
  return LogScalar::from_exp10(a.exp10_ + b.exp10_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
  if (b.is_zero()) throw std::domain_error("LogScalar: division by zero");
  if (a.is_zero()) return LogScalar::zero();
  return LogScalar::from_exp10(a.exp10_ - b.exp10_);
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.exp10_, b.exp10_);
  const double lo = std::min(a.exp10_, b.exp10_);
  const double d = hi - lo;
  if (d > kAddCutoffDecades) return LogScalar::from_exp10(hi);
  return LogScalar::from_exp10(hi + std::log1p(std::pow(10.0, -d)) / M_LN10);
}

bool operator<(const LogScalar& a, const LogScalar& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  return a.exp10_ < b.exp10_;
}

std::string LogScalar::str() const {
  if (!positive_) return "0";
  char buf[64];
  if (std::fabs(exp10_) <= 15.0) {
    std::snprintf(buf, sizeof(buf), "%.10g", to_real());
  } else {
    std::snprintf(buf, sizeof(buf), "10^{%.4f}", exp10_);
  }
  return buf;
}

LogScalar combine(const LogScalar& a, const LogScalar& b, Combine op) {
  switch (op) {
    case Combine::mul: return a * b;
    case Combine::div: return a / b;
    case Combine::add: return a + b;
  }
  throw std::invalid_argument("combine: unknown op");
}

}  // namespace qbound
