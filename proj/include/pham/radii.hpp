#pragma once

#include <vector>

#include "pham/params.hpp"

namespace pham {

/// Solved radii of starlikeness/univalence (r_star) and convexity (r_c),
/// with the certified |G| residuals at the returned roots and the total
/// bisection iteration count across both solves.
struct RadiiResult {
  double r_star;
  double r_c;
  double residual_star;
  double residual_c;
  int iterations;
};

struct CurveSample {
  double r;
  double g1;
  double g2;
};

/// G_1(r) = alpha r 2F1(1, 1/alpha; 1+1/alpha; r) - alpha/(2 kappa).
/// Negative at r = 0, strictly increasing, +infinity as r -> 1.
double g1(const ClassParams& params, double r, const SeriesEvalConfig& cfg = {});

/// G_2(r) = r/(1-r) + (2 alpha - 1) r 2F1(1, 1/alpha; 1+1/alpha; r)
///          - alpha/(2 kappa).
double g2(const ClassParams& params, double r, const SeriesEvalConfig& cfg = {});

/// The same functions summed along their derivation route,
///   G_1 = Sum_{n>=2} r^{n-1} / (1/alpha + n - 2) - alpha/(2 kappa)
///   G_2 = Sum_{n>=2} n r^{n-1} / (1/alpha + n - 2) - alpha/(2 kappa),
/// kept as an independent evaluation path for cross-checking.
double g1_series(const ClassParams& params, double r,
                 const SeriesEvalConfig& cfg = {});
double g2_series(const ClassParams& params, double r,
                 const SeriesEvalConfig& cfg = {});

/// Bisection for the unique roots of G_1 and G_2 in (0, 1). Both functions
/// are negative at 0 and strictly increasing, so the smallest root is the
/// only one. Residuals are certified below `tol`. Throws BracketFailure when
/// no sign change is found before r_cap (root beyond reach, kappa tiny).
RadiiResult solve_radii(const ClassParams& params, double tol = 1e-10);

/// Inclusive uniform grid of `steps` samples of (r, G_1(r), G_2(r)) over
/// [r_min, r_max]. Requires 0 <= r_min < r_max <= r_cap and steps >= 2.
std::vector<CurveSample> curve(const ClassParams& params, double r_min,
                               double r_max, int steps,
                               const SeriesEvalConfig& cfg = {});

}  // namespace pham
