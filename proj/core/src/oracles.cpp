#include "qbound/oracles.hpp"

#include <stdexcept>

namespace qbound {

ErlangC erlang_c(int n, double a) {
  if (n < 1) throw std::invalid_argument("erlang_c: need at least one server");
  if (a < 0.0) throw std::invalid_argument("erlang_c: offered load must be nonnegative");
  if (a >= n) throw std::invalid_argument("erlang_c: unstable, offered load must be < n");
  if (a == 0.0) return {0.0, 0.0};
  double b = 1.0;
  for (int k = 1; k <= n; ++k) b = a * b / (k + a * b);
  const double rho = a / n;
  const double c = b / (1.0 - rho * (1.0 - b));
  return {c, c * rho / (1.0 - rho)};
}

PollaczekKhinchine pk_formula(double lambda, double ES, double ES2) {
  if (lambda < 0.0 || ES <= 0.0 || ES2 < ES * ES)
    throw std::invalid_argument("pk_formula: invalid arrival rate or service moments");
  const double rho = lambda * ES;
  if (rho >= 1.0) throw std::invalid_argument("pk_formula: unstable, need lambda*ES < 1");
  const double w = lambda * ES2 / (2.0 * (1.0 - rho));
  return {w, lambda * w};
}

}  // namespace qbound
