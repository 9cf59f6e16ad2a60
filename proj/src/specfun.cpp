#include "pham/specfun.hpp"

#include <cmath>
#include <string>

namespace pham {

namespace {

void check_radius(double r, double r_cap) {
  if (!(r >= 0.0 && r <= r_cap)) {
    throw ArgumentOutOfRange("series argument r must lie in [0, " +
                             std::to_string(r_cap) + "]; got " +
                             std::to_string(r));
  }
}

}  // namespace

SeriesSum hyp2f1_partial(const ClassParams& params, double r,
                         const SeriesEvalConfig& cfg) {
  cfg.validate();
  check_radius(r, cfg.r_cap);
  if (r == 0.0) return {1.0, 0.0, 1};

  const double alpha = params.alpha();
  // Kahan-compensated summation: up to ~1e6 terms near r_cap.
  double sum = 0.0;
  double comp = 0.0;
  double r_pow = 1.0;  // r^n
  for (int n = 0; n < cfg.max_terms; ++n) {
    const double term = r_pow / (1.0 + alpha * n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    r_pow *= r;
    // Tail over n' > n is bounded by r^{n+1} / ((1 + alpha n)(1 - r)).
    const double tail = r_pow / ((1.0 + alpha * n) * (1.0 - r));
    if (tail <= cfg.tolerance) return {sum, tail, n + 1};
    if (n + 1 == cfg.max_terms) return {sum, tail, n + 1};
  }
  return {sum, r_pow / (1.0 - r), cfg.max_terms};  // unreachable
}

double hyp2f1_special(const ClassParams& params, double r,
                      const SeriesEvalConfig& cfg) {
  const SeriesSum s = hyp2f1_partial(params, r, cfg);
  if (s.tail_bound > cfg.tolerance) {
    throw BudgetExceeded("hyp2f1: tail bound " + std::to_string(s.tail_bound) +
                         " above tolerance after " + std::to_string(s.terms) +
                         " terms at r = " + std::to_string(r));
  }
  return s.value;
}

double weight(int n, const ClassParams& params) {
  if (n < 2) {
    throw ArgumentOutOfRange("weight index n must be >= 2; got " +
                             std::to_string(n));
  }
  const double nn = static_cast<double>(n);
  return nn + params.alpha() * nn * (nn - 2.0);
}

double log_closed_form(AlphaKind kind, double r, double r_cap) {
  check_radius(r, r_cap);
  if (r == 0.0) return 1.0;

  if (kind == AlphaKind::one) {
    return -std::log1p(-r) / r;
  }
  // alpha = 1/2: (2/r^2)(-ln(1-r) - r). The subtraction cancels for small r,
  // so switch to the series 1 + 2r/3 + r^2/2 + ... there.
  if (r < 1e-3) {
    double sum = 0.0;
    double r_pow = 1.0;
    for (int n = 0; n < 16; ++n) {
      sum += 2.0 * r_pow / (n + 2.0);
      r_pow *= r;
    }
    return sum;
  }
  return 2.0 * (-std::log1p(-r) - r) / (r * r);
}

}  // namespace pham
