#include "qbound/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "qbound/special.hpp"

namespace qbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Marsaglia-Tsang gamma(shape, 1) sampler.
double sample_std_gamma(double shape, RngStream& rng) {
  if (shape < 1.0) {
    const double u = rng.next_unit();
    return sample_std_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = rng.normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::deterministic: return "deterministic";
    case Family::exponential: return "exponential";
    case Family::erlang: return "erlang";
    case Family::gamma: return "gamma";
    case Family::uniform: return "uniform";
    case Family::hyperexponential: return "hyperexponential";
    case Family::lognormal: return "lognormal";
    case Family::weibull: return "weibull";
    case Family::pareto: return "pareto";
  }
  return "?";
}

void Distribution::finalize() {
  switch (family_) {
    case Family::deterministic:
      mean_ = a_;
      variance_ = 0.0;
      break;
    case Family::exponential:
      mean_ = 1.0 / a_;
      variance_ = 1.0 / (a_ * a_);
      break;
    case Family::erlang:
      mean_ = k_ / a_;
      variance_ = k_ / (a_ * a_);
      break;
    case Family::gamma:
      mean_ = a_ / b_;
      variance_ = a_ / (b_ * b_);
      break;
    case Family::uniform:
      mean_ = 0.5 * (a_ + b_);
      variance_ = (b_ - a_) * (b_ - a_) / 12.0;
      break;
    case Family::hyperexponential: {
      double m = 0.0, m2 = 0.0, wsum = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i) wsum += weights_[i];
      for (auto& w : weights_) w /= wsum;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        m += weights_[i] / rates_[i];
        m2 += weights_[i] * 2.0 / (rates_[i] * rates_[i]);
      }
      mean_ = m;
      variance_ = m2 - m * m;
      eq_weights_.resize(weights_.size());
      for (std::size_t i = 0; i < weights_.size(); ++i)
        eq_weights_[i] = weights_[i] / rates_[i] / m;
      break;
    }
    case Family::lognormal:
      mean_ = std::exp(a_ + 0.5 * b_ * b_);
      variance_ = (std::exp(b_ * b_) - 1.0) * std::exp(2.0 * a_ + b_ * b_);
      break;
    case Family::weibull: {
      const double g1 = std::tgamma(1.0 + 1.0 / a_);
      const double g2 = std::tgamma(1.0 + 2.0 / a_);
      mean_ = b_ * g1;
      variance_ = b_ * b_ * (g2 - g1 * g1);
      break;
    }
    case Family::pareto:
      mean_ = a_ * b_ / (a_ - 1.0);
      variance_ = a_ > 2.0 ? b_ * b_ * a_ / ((a_ - 2.0) * (a_ - 1.0) * (a_ - 1.0)) : kInf;
      break;
  }
}

Distribution Distribution::deterministic(double value) {
  require(value > 0.0 && std::isfinite(value), "deterministic: value must be positive");
  Distribution d;
  d.family_ = Family::deterministic;
  d.a_ = value;
  d.finalize();
  return d;
}

Distribution Distribution::exponential(double rate) {
  require(rate > 0.0 && std::isfinite(rate), "exponential: rate must be positive");
  Distribution d;
  d.family_ = Family::exponential;
  d.a_ = rate;
  d.finalize();
  return d;
}

Distribution Distribution::erlang(int k, double mean) {
  require(k >= 1, "erlang: k must be a positive integer");
  require(mean > 0.0 && std::isfinite(mean), "erlang: mean must be positive");
  Distribution d;
  d.family_ = Family::erlang;
  d.k_ = k;
  d.a_ = k / mean;
  d.finalize();
  return d;
}

Distribution Distribution::gamma(double shape, double rate) {
  require(shape > 0.0 && std::isfinite(shape), "gamma: shape must be positive");
  require(rate > 0.0 && std::isfinite(rate), "gamma: rate must be positive");
  Distribution d;
  d.family_ = Family::gamma;
  d.a_ = shape;
  d.b_ = rate;
  d.finalize();
  return d;
}

Distribution Distribution::uniform(double lo, double hi) {
  require(lo >= 0.0, "uniform: lower endpoint must be nonnegative");
  require(hi > lo && std::isfinite(hi), "uniform: need lo < hi");
  Distribution d;
  d.family_ = Family::uniform;
  d.a_ = lo;
  d.b_ = hi;
  d.finalize();
  return d;
}

Distribution Distribution::hyperexponential(std::vector<double> weights,
                                            std::vector<double> rates) {
  require(!weights.empty(), "hyperexponential: needs at least one phase");
  require(weights.size() == rates.size(),
          "hyperexponential: weights and rates must have equal length");
  double sum = 0.0;
  for (double w : weights) {
    require(w > 0.0, "hyperexponential: weights must be positive");
    sum += w;
  }
  require(std::fabs(sum - 1.0) <= 1e-9, "hyperexponential: weights must sum to 1");
  for (double r : rates) require(r > 0.0, "hyperexponential: rates must be positive");
  Distribution d;
  d.family_ = Family::hyperexponential;
  d.weights_ = std::move(weights);
  d.rates_ = std::move(rates);
  d.finalize();
  return d;
}

Distribution Distribution::lognormal(double mu, double sigma) {
  require(std::isfinite(mu), "lognormal: mu must be finite");
  require(sigma > 0.0 && std::isfinite(sigma), "lognormal: sigma must be positive");
  Distribution d;
  d.family_ = Family::lognormal;
  d.a_ = mu;
  d.b_ = sigma;
  d.finalize();
  return d;
}

Distribution Distribution::weibull(double shape, double scale) {
  require(shape > 0.0 && std::isfinite(shape), "weibull: shape must be positive");
  require(scale > 0.0 && std::isfinite(scale), "weibull: scale must be positive");
  Distribution d;
  d.family_ = Family::weibull;
  d.a_ = shape;
  d.b_ = scale;
  d.finalize();
  return d;
}

Distribution Distribution::pareto(double shape, double scale) {
  require(shape > 1.0, "pareto: shape must exceed 1 so the mean is finite");
  require(scale > 0.0 && std::isfinite(scale), "pareto: scale must be positive");
  Distribution d;
  d.family_ = Family::pareto;
  d.a_ = shape;
  d.b_ = scale;
  d.finalize();
  return d;
}

Distribution Distribution::pareto_with_mean(double shape, double mean) {
  require(shape > 1.0, "pareto: shape must exceed 1 so the mean is finite");
  require(mean > 0.0, "pareto: mean must be positive");
  return pareto(shape, mean * (shape - 1.0) / shape);
}

double Distribution::moment_order_available() const {
  return family_ == Family::pareto ? a_ : kInf;
}

double Distribution::raw_moment(double p) const {
  require(p >= 0.0, "raw_moment: order must be nonnegative");
  if (family_ == Family::pareto && p >= a_)
    throw std::domain_error("raw_moment: infinite moment, pareto needs order < shape");
  switch (family_) {
    case Family::deterministic:
      return std::pow(a_, p);
    case Family::exponential:
      return std::exp(std::lgamma(p + 1.0) - p * std::log(a_));
    case Family::erlang:
      return std::exp(std::lgamma(k_ + p) - std::lgamma(static_cast<double>(k_)) -
                      p * std::log(a_));
    case Family::gamma:
      return std::exp(std::lgamma(a_ + p) - std::lgamma(a_) - p * std::log(b_));
    case Family::uniform:
      return (std::pow(b_, p + 1.0) - std::pow(a_, p + 1.0)) / ((b_ - a_) * (p + 1.0));
    case Family::hyperexponential: {
      double m = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        m += weights_[i] * std::exp(std::lgamma(p + 1.0) - p * std::log(rates_[i]));
      return m;
    }
    case Family::lognormal:
      return std::exp(p * a_ + 0.5 * p * p * b_ * b_);
    case Family::weibull:
      return std::pow(b_, p) * std::tgamma(1.0 + p / a_);
    case Family::pareto:
      return a_ * std::pow(b_, p) / (a_ - p);
  }
  return 0.0;
}

double Distribution::normalized_moment(double p) const {
  return raw_moment(p) / std::pow(mean_, p);
}

double Distribution::laplace(double theta) const {
  require(theta > 0.0, "laplace: theta must be positive");
  switch (family_) {
    case Family::deterministic:
      return std::exp(-theta * a_);
    case Family::exponential:
      return a_ / (a_ + theta);
    case Family::erlang:
      return std::pow(a_ / (a_ + theta), static_cast<double>(k_));
    case Family::gamma:
      return std::pow(b_ / (b_ + theta), a_);
    case Family::uniform:
      return (std::exp(-theta * a_) - std::exp(-theta * b_)) / (theta * (b_ - a_));
    case Family::hyperexponential: {
      double v = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * rates_[i] / (rates_[i] + theta);
      return v;
    }
    default:
      break;
  }
  // No closed form: E[exp(-theta X)] = 1 - theta * int_0^inf exp(-theta x) S(x) dx.
  // The survival form keeps the integrand bounded even when the density is
  // singular at the origin.
  double hi = std::max(mean_, 1.0 / theta);
  while (std::exp(-theta * hi) > 1e-14 && survival(hi) > 1e-14 && hi < 1e280) hi *= 2.0;
  const double tail_integral = integrate(
      [&](double x) { return std::exp(-theta * x) * survival(x); }, 0.0, hi,
      1e-11 / theta);
  return std::min(1.0, std::max(0.0, 1.0 - theta * tail_integral));
}

double Distribution::pdf(double x) const {
  if (x < 0.0) return 0.0;
  switch (family_) {
    case Family::deterministic:
      return 0.0;  // point mass, no density
    case Family::exponential:
      return a_ * std::exp(-a_ * x);
    case Family::erlang:
    case Family::gamma: {
      const double shape = family_ == Family::erlang ? k_ : a_;
      const double rate = family_ == Family::erlang ? a_ : b_;
      if (x == 0.0) return shape == 1.0 ? rate : (shape < 1.0 ? kInf : 0.0);
      return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) -
                      rate * x - std::lgamma(shape));
    }
    case Family::uniform:
      return (x >= a_ && x <= b_) ? 1.0 / (b_ - a_) : 0.0;
    case Family::hyperexponential: {
      double v = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * rates_[i] * std::exp(-rates_[i] * x);
      return v;
    }
    case Family::lognormal: {
      if (x == 0.0) return 0.0;
      const double z = (std::log(x) - a_) / b_;
      return std::exp(-0.5 * z * z) / (x * b_ * std::sqrt(2.0 * M_PI));
    }
    case Family::weibull: {
      if (x == 0.0) return a_ == 1.0 ? 1.0 / b_ : (a_ < 1.0 ? kInf : 0.0);
      const double u = std::pow(x / b_, a_);
      return (a_ / b_) * std::pow(x / b_, a_ - 1.0) * std::exp(-u);
    }
    case Family::pareto:
      return x < b_ ? 0.0 : a_ * std::pow(b_, a_) * std::pow(x, -a_ - 1.0);
  }
  return 0.0;
}

double Distribution::survival(double x) const {
  if (x < 0.0) return 1.0;
  switch (family_) {
    case Family::deterministic:
      return x < a_ ? 1.0 : 0.0;
    case Family::exponential:
      return std::exp(-a_ * x);
    case Family::erlang:
      return gamma_q(static_cast<double>(k_), a_ * x);
    case Family::gamma:
      return gamma_q(a_, b_ * x);
    case Family::uniform:
      if (x <= a_) return 1.0;
      if (x >= b_) return 0.0;
      return (b_ - x) / (b_ - a_);
    case Family::hyperexponential: {
      double v = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * std::exp(-rates_[i] * x);
      return v;
    }
    case Family::lognormal:
      if (x == 0.0) return 1.0;
      return 1.0 - normal_cdf((std::log(x) - a_) / b_);
    case Family::weibull:
      return std::exp(-std::pow(x / b_, a_));
    case Family::pareto:
      return x <= b_ ? 1.0 : std::pow(b_ / x, a_);
  }
  return 0.0;
}

// E[min(X, y)], the unnormalized integrated-tail CDF.
double Distribution::integrated_tail(double y) const {
  if (y <= 0.0) return 0.0;
  switch (family_) {
    case Family::deterministic:
      return std::min(a_, y);
    case Family::exponential:
      return (1.0 - std::exp(-a_ * y)) / a_;
    case Family::erlang:
    case Family::gamma: {
      const double shape = family_ == Family::erlang ? k_ : a_;
      const double rate = family_ == Family::erlang ? a_ : b_;
      return (shape / rate) * gamma_p(shape + 1.0, rate * y) +
             y * gamma_q(shape, rate * y);
    }
    case Family::uniform: {
      if (y <= a_) return y;
      if (y >= b_) return mean_;
      return (y * y - a_ * a_) / (2.0 * (b_ - a_)) + y * (b_ - y) / (b_ - a_);
    }
    case Family::hyperexponential: {
      double v = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        v += weights_[i] * (1.0 - std::exp(-rates_[i] * y)) / rates_[i];
      return v;
    }
    case Family::lognormal: {
      const double z = (std::log(y) - a_) / b_;
      return mean_ * normal_cdf(z - b_) + y * (1.0 - normal_cdf(z));
    }
    case Family::weibull: {
      const double u = std::pow(y / b_, a_);
      return b_ * std::tgamma(1.0 + 1.0 / a_) * gamma_p(1.0 + 1.0 / a_, u) +
             y * std::exp(-u);
    }
    case Family::pareto: {
      if (y <= b_) return y;
      return mean_ - std::pow(b_, a_) * std::pow(y, 1.0 - a_) / (a_ - 1.0);
    }
  }
  return 0.0;
}

double Distribution::sample(RngStream& rng) const {
  switch (family_) {
    case Family::deterministic:
      return a_;
    case Family::exponential:
      return rng.exponential(a_);
    case Family::erlang: {
      if (k_ <= 16) {
        double s = 0.0;
        for (int i = 0; i < k_; ++i) s += rng.exponential(a_);
        return s;
      }
      return sample_std_gamma(static_cast<double>(k_), rng) / a_;
    }
    case Family::gamma:
      return sample_std_gamma(a_, rng) / b_;
    case Family::uniform:
      return a_ + (b_ - a_) * rng.next_unit();
    case Family::hyperexponential: {
      double u = rng.next_unit();
      std::size_t i = 0;
      for (; i + 1 < weights_.size(); ++i) {
        if (u < weights_[i]) break;
        u -= weights_[i];
      }
      return rng.exponential(rates_[i]);
    }
    case Family::lognormal:
      return std::exp(a_ + b_ * rng.normal());
    case Family::weibull:
      return b_ * std::pow(-std::log(rng.next_unit()), 1.0 / a_);
    case Family::pareto:
      return b_ * std::pow(rng.next_unit(), -1.0 / a_);
  }
  return 0.0;
}

double Distribution::equilibrium_sample(RngStream& rng) const {
  switch (family_) {
    case Family::exponential:
      // Memoryless: the stationary excess is the distribution itself.
      return sample(rng);
    case Family::deterministic:
      return a_ * rng.next_unit();
    case Family::erlang: {
      // Uniform mixture of erlang(1..k) stages at the same rate.
      const double u = rng.next_unit();
      const int j = 1 + std::min(k_ - 1, static_cast<int>(u * k_));
      double s = 0.0;
      for (int i = 0; i < j; ++i) s += rng.exponential(a_);
      return s;
    }
    case Family::hyperexponential: {
      double u = rng.next_unit();
      std::size_t i = 0;
      for (; i + 1 < eq_weights_.size(); ++i) {
        if (u < eq_weights_[i]) break;
        u -= eq_weights_[i];
      }
      return rng.exponential(rates_[i]);
    }
    case Family::pareto: {
      // Piecewise inverse: linear below the scale point, power beyond it.
      const double u = rng.next_unit();
      const double split = (a_ - 1.0) / a_;
      if (u <= split) return u * mean_;
      return b_ * std::pow(a_ * (1.0 - u), -1.0 / (a_ - 1.0));
    }
    default: {
      // Numeric inversion of the integrated-tail CDF to 1e-10 absolute.
      const double u = rng.next_unit();
      const double target = u * mean_;
      double lo = 0.0;
      double hi = std::max(mean_, 1e-12);
      while (integrated_tail(hi) < target && hi < 1e290) {
        lo = hi;
        hi *= 2.0;
      }
      double y = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        const double f = integrated_tail(y) - target;
        if (std::fabs(f) <= 1e-10 * mean_) break;
        if (f > 0.0) hi = y; else lo = y;
        const double deriv = survival(y);
        const double newton = deriv > 0.0 ? y - f / deriv : -1.0;
        y = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * (1.0 + hi)) break;
      }
      return y;
    }
  }
}

Distribution Distribution::scaled(double c) const {
  require(c > 0.0 && std::isfinite(c), "scaled: factor must be positive");
  switch (family_) {
    case Family::deterministic: return deterministic(c * a_);
    case Family::exponential: return exponential(a_ / c);
    case Family::erlang: return erlang(k_, c * mean_);
    case Family::gamma: return gamma(a_, b_ / c);
    case Family::uniform: return uniform(c * a_, c * b_);
    case Family::hyperexponential: {
      std::vector<double> r = rates_;
      for (auto& x : r) x /= c;
      return hyperexponential(weights_, std::move(r));
    }
    case Family::lognormal: return lognormal(a_ + std::log(c), b_);
    case Family::weibull: return weibull(a_, c * b_);
    case Family::pareto: return pareto(a_, c * b_);
  }
  throw std::logic_error("scaled: unreachable");
}

Distribution Distribution::with_mean(double m) const {
  require(m > 0.0 && std::isfinite(m), "with_mean: mean must be positive");
  return scaled(m / mean_);
}

std::string Distribution::describe() const {
  switch (family_) {
    case Family::deterministic: return "deterministic(value=" + fmt(a_) + ")";
    case Family::exponential: return "exponential(rate=" + fmt(a_) + ")";
    case Family::erlang:
      return "erlang(k=" + std::to_string(k_) + ",mean=" + fmt(mean_) + ")";
    case Family::gamma: return "gamma(shape=" + fmt(a_) + ",rate=" + fmt(b_) + ")";
    case Family::uniform: return "uniform(lo=" + fmt(a_) + ",hi=" + fmt(b_) + ")";
    case Family::hyperexponential: {
      std::string s = "hyperexponential(w=[";
      for (std::size_t i = 0; i < weights_.size(); ++i)
        s += (i ? "," : "") + fmt(weights_[i]);
      s += "],rates=[";
      for (std::size_t i = 0; i < rates_.size(); ++i) s += (i ? "," : "") + fmt(rates_[i]);
      return s + "])";
    }
    case Family::lognormal: return "lognormal(mu=" + fmt(a_) + ",sigma=" + fmt(b_) + ")";
    case Family::weibull: return "weibull(shape=" + fmt(a_) + ",scale=" + fmt(b_) + ")";
    case Family::pareto: return "pareto(shape=" + fmt(a_) + ",scale=" + fmt(b_) + ")";
  }
  return "?";
}

std::string Distribution::to_json_string() const {
  nlohmann::json j;
  j["family"] = family_name(family_);
  switch (family_) {
    case Family::deterministic: j["value"] = a_; break;
    case Family::exponential: j["rate"] = a_; break;
    case Family::erlang: j["k"] = k_; j["mean"] = mean_; break;
    case Family::gamma: j["shape"] = a_; j["rate"] = b_; break;
    case Family::uniform: j["lo"] = a_; j["hi"] = b_; break;
    case Family::hyperexponential: j["weights"] = weights_; j["rates"] = rates_; break;
    case Family::lognormal: j["mu"] = a_; j["sigma"] = b_; break;
    case Family::weibull: j["shape"] = a_; j["scale"] = b_; break;
    case Family::pareto: j["shape"] = a_; j["scale"] = b_; break;
  }
  return j.dump();
}

Distribution Distribution::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::string fam = j.at("family").get<std::string>();
  auto num = [&](const char* key) { return j.at(key).get<double>(); };
  auto has = [&](const char* key) { return j.contains(key); };
  if (fam == "deterministic") return deterministic(num("value"));
  if (fam == "exponential")
    return has("rate") ? exponential(num("rate")) : exponential(1.0 / num("mean"));
  if (fam == "erlang") {
    const int k = j.at("k").get<int>();
    return has("mean") ? erlang(k, num("mean")) : erlang(k, k / num("rate"));
  }
  if (fam == "gamma") {
    const double shape = num("shape");
    return has("rate") ? gamma(shape, num("rate")) : gamma(shape, shape / num("mean"));
  }
  if (fam == "uniform") {
    const double lo = has("lo") ? num("lo") : num("a");
    const double hi = has("hi") ? num("hi") : num("b");
    return uniform(lo, hi);
  }
  if (fam == "hyperexponential")
    return hyperexponential(j.at("weights").get<std::vector<double>>(),
                            j.at("rates").get<std::vector<double>>());
  if (fam == "lognormal") {
    const double sigma = num("sigma");
    const double mu = has("mu") ? num("mu") : std::log(num("mean")) - 0.5 * sigma * sigma;
    return lognormal(mu, sigma);
  }
  if (fam == "weibull") {
    const double shape = num("shape");
    if (has("scale")) return weibull(shape, num("scale"));
    return weibull(shape, num("mean") / std::tgamma(1.0 + 1.0 / shape));
  }
  if (fam == "pareto") {
    const double shape = num("shape");
    return has("scale") ? pareto(shape, num("scale")) : pareto_with_mean(shape, num("mean"));
  }
  throw std::invalid_argument("unknown distribution family: " + fam);
}

}  // namespace qbound
