#include "pham/radii.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pham/specfun.hpp"

namespace pham {

namespace {

// G(r) enclosed in [lo, hi]; exact up to summation rounding.
struct Interval {
  double lo;
  double hi;
};

Interval g1_interval(const ClassParams& p, double r,
                     const SeriesEvalConfig& cfg) {
  const double offset = p.alpha() / (2.0 * p.kappa());
  const SeriesSum f = hyp2f1_partial(p, r, cfg);
  const double s = p.alpha() * r;  // >= 0
  return {s * f.value - offset, s * (f.value + f.tail_bound) - offset};
}

Interval g2_interval(const ClassParams& p, double r,
                     const SeriesEvalConfig& cfg) {
  const double base =
      r / (1.0 - r) - p.alpha() / (2.0 * p.kappa());
  const SeriesSum f = hyp2f1_partial(p, r, cfg);
  const double s = (2.0 * p.alpha() - 1.0) * r;  // sign depends on alpha
  const double a = s * f.value;
  const double b = s * (f.value + f.tail_bound);
  return {base + std::min(a, b), base + std::max(a, b)};
}

using IntervalFn = Interval (*)(const ClassParams&, double,
                                const SeriesEvalConfig&);

double certified(const ClassParams& p, double r, const SeriesEvalConfig& cfg,
                 IntervalFn fn, const char* name) {
  const Interval iv = fn(p, r, cfg);
  if (iv.hi - iv.lo > 2.0 * cfg.tolerance) {
    throw BudgetExceeded(std::string(name) +
                         ": series budget exhausted at r = " +
                         std::to_string(r));
  }
  return 0.5 * (iv.lo + iv.hi);
}

struct RootOut {
  double root;
  double residual;
  int iterations;
};

// Bisection for the unique root of an increasing G with G(0) < 0.
// Sign decisions use the series enclosure, so a partial sum whose sign is
// already certain never wastes budget on an unreachable tolerance.
RootOut bisect_root(const ClassParams& p, double tol,
                    const SeriesEvalConfig& cfg, IntervalFn fn,
                    const char* name) {
  constexpr int kMaxIter = 200;

  // Bracket: G(0) = -alpha/(2 kappa) < 0; push the right end toward r_cap
  // until G is certifiably positive there.
  double hi = 1.0 - 1e-6;
  if (hi > cfg.r_cap) hi = cfg.r_cap;
  bool bracketed = false;
  while (true) {
    if (fn(p, hi, cfg).lo > 0.0) {
      bracketed = true;
      break;
    }
    if (hi >= cfg.r_cap) break;
    hi = std::min(cfg.r_cap, 1.0 - (1.0 - hi) / 10.0);
  }
  if (!bracketed) {
    // Monotonicity guard failed to produce the expected -/+ pattern; scan
    // left to right before giving up.
    for (double r = 1e-4; r < cfg.r_cap; r += 1e-4) {
      if (fn(p, r, cfg).lo > 0.0) {
        hi = r;
        bracketed = true;
        break;
      }
    }
    if (!bracketed) {
      throw BracketFailure(std::string(name) +
                           ": no sign change in (0, r_cap); kappa = " +
                           std::to_string(p.kappa()));
    }
  }

  double lo = 0.0;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const Interval iv = fn(p, mid, cfg);
    if (iv.lo >= -0.5 * tol && iv.hi <= 0.5 * tol) {
      return {mid, 0.5 * (iv.lo + iv.hi), iter};
    }
    if (iv.hi < 0.0) {
      lo = mid;
    } else if (iv.lo > 0.0) {
      hi = mid;
    } else {
      throw BudgetExceeded(std::string(name) +
                           ": sign undecidable within series budget at r = " +
                           std::to_string(mid));
    }
    if (hi - lo < 1e-16) {
      return {mid, 0.5 * (iv.lo + iv.hi), iter};
    }
  }
  throw BudgetExceeded(std::string(name) + ": bisection iteration cap hit");
}

void check_curve_args(double r_min, double r_max, int steps, double r_cap) {
  if (!(r_min >= 0.0 && r_min < r_max && r_max <= r_cap)) {
    throw ArgumentOutOfRange("need 0 <= r_min < r_max <= r_cap");
  }
  if (steps < 2) {
    throw ArgumentOutOfRange("steps must be >= 2");
  }
}

}  // namespace

double g1(const ClassParams& params, double r, const SeriesEvalConfig& cfg) {
  cfg.validate();
  return certified(params, r, cfg, g1_interval, "G1");
}

double g2(const ClassParams& params, double r, const SeriesEvalConfig& cfg) {
  cfg.validate();
  return certified(params, r, cfg, g2_interval, "G2");
}

double g1_series(const ClassParams& params, double r,
                 const SeriesEvalConfig& cfg) {
  cfg.validate();
  if (!(r >= 0.0 && r <= cfg.r_cap)) {
    throw ArgumentOutOfRange("r must lie in [0, r_cap]");
  }
  const double c = 1.0 / params.alpha();
  const double offset = params.alpha() / (2.0 * params.kappa());
  if (r == 0.0) return -offset;

  double sum = 0.0, comp = 0.0;
  double r_pow = 1.0;  // r^{n-1} starting at n = 2
  for (int n = 2; n < 2 + cfg.max_terms; ++n) {
    r_pow *= r;
    const double term = r_pow / (c + n - 2.0);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const double tail = r_pow * r / ((c + n - 1.0) * (1.0 - r));
    if (tail <= cfg.tolerance) return sum - offset;
  }
  throw BudgetExceeded("G1 series did not converge within max_terms");
}

double g2_series(const ClassParams& params, double r,
                 const SeriesEvalConfig& cfg) {
  cfg.validate();
  if (!(r >= 0.0 && r <= cfg.r_cap)) {
    throw ArgumentOutOfRange("r must lie in [0, r_cap]");
  }
  const double c = 1.0 / params.alpha();
  const double offset = params.alpha() / (2.0 * params.kappa());
  if (r == 0.0) return -offset;

  double sum = 0.0, comp = 0.0;
  double r_pow = 1.0;
  for (int n = 2; n < 2 + cfg.max_terms; ++n) {
    r_pow *= r;
    const double term = n * r_pow / (c + n - 2.0);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    // n/(c+n-2) is monotone in n, so the tail factor is bounded by the
    // larger of 1 (its limit) and its value at the first omitted term.
    const double factor = std::max(1.0, (n + 1.0) / (c + n - 1.0));
    const double tail = factor * r_pow * r / (1.0 - r);
    if (tail <= cfg.tolerance) return sum - offset;
  }
  throw BudgetExceeded("G2 series did not converge within max_terms");
}

RadiiResult solve_radii(const ClassParams& params, double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-2)) {
    throw ArgumentOutOfRange("tol must lie in [1e-13, 1e-2]");
  }
  SeriesEvalConfig cfg;
  cfg.tolerance = std::max(1e-15, std::min(cfg.tolerance, 0.1 * tol));

  const RootOut star = bisect_root(params, tol, cfg, g1_interval, "G1");
  const RootOut conv = bisect_root(params, tol, cfg, g2_interval, "G2");
  return {star.root, conv.root, star.residual, conv.residual,
          star.iterations + conv.iterations};
}

std::vector<CurveSample> curve(const ClassParams& params, double r_min,
                               double r_max, int steps,
                               const SeriesEvalConfig& cfg) {
  cfg.validate();
  check_curve_args(r_min, r_max, steps, cfg.r_cap);
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double r = r_min + (r_max - r_min) * k / (steps - 1);
    out.push_back({r, g1(params, r, cfg), g2(params, r, cfg)});
  }
  return out;
}

}  // namespace pham
