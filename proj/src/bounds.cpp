#include "pham/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pham/specfun.hpp"

namespace pham {

namespace {

// Inequalities are tested with this slack to absorb rounding; sharp
// (equality) cases land on the inconclusive side.
constexpr double kStrictSlack = 1e-12;

}  // namespace

double bn_bound(int n, const ClassParams& params) {
  return params.kappa() / weight(n, params);
}

double an_sum_bound(int n, const ClassParams& params) {
  return 2.0 * params.kappa() / weight(n, params);
}

HarmonicSeries extremal_coanalytic(int n, const ClassParams& params) {
  return HarmonicSeries::single_term(n, 0.0, bn_bound(n, params));
}

HarmonicSeries extremal_analytic(const ClassParams& params, int degree) {
  if (degree < 2 || degree > kMaxDegree) {
    throw ArgumentOutOfRange("degree must lie in [2, " +
                             std::to_string(kMaxDegree) + "]");
  }
  std::vector<Complex> tail(static_cast<std::size_t>(degree) - 1);
  for (int n = 2; n <= degree; ++n) {
    tail[static_cast<std::size_t>(n) - 2] = an_sum_bound(n, params);
  }
  return HarmonicSeries(AnalyticSeries(std::move(tail)), {});
}

GrowthEnvelope growth_envelope(const ClassParams& params, double radius,
                               const SeriesEvalConfig& cfg) {
  cfg.validate();
  if (!(radius >= 0.0 && radius <= cfg.r_cap)) {
    throw ArgumentOutOfRange("radius must lie in [0, r_cap]");
  }
  if (radius == 0.0) return {0.0, 0.0, 0.0, 0};

  const double alpha = params.alpha();
  const double two_kappa = 2.0 * params.kappa();
  const double r = radius;

  double up = 0.0, up_comp = 0.0;
  double lo = 0.0, lo_comp = 0.0;
  double r_pow = r;  // r^n
  for (int n = 2; n < 2 + cfg.max_terms; ++n) {
    r_pow *= r;
    const double term = r_pow / (n * (1.0 + alpha * (n - 2)));

    double y = term - up_comp;
    double t = up + y;
    up_comp = (t - up) - y;
    up = t;

    const double signed_term = (n % 2 == 0) ? -term : term;  // (-1)^{n-1}
    y = signed_term - lo_comp;
    t = lo + y;
    lo_comp = (t - lo) - y;
    lo = t;

    // Positive series tail: geometric bound. Alternating series tail: the
    // first omitted term (magnitudes decrease monotonically).
    const double next = r_pow * r / ((n + 1) * (1.0 + alpha * (n - 1)));
    const double up_tail = next / (1.0 - r);
    if (up_tail <= cfg.tolerance && next <= cfg.tolerance) {
      return {r, r + two_kappa * lo, r + two_kappa * up, n - 1};
    }
  }
  throw BudgetExceeded("growth envelope did not converge within max_terms");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::member_certified:
      return "member_certified";
    case Verdict::not_member_witness:
      return "not_member_witness";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

MembershipVerdict sufficient_membership(const HarmonicSeries& f,
                                        const ClassParams& params) {
  double sum = 0.0;
  for (int n = 2; n <= f.degree(); ++n) {
    sum += weight(n, params) * (std::abs(f.a(n)) + std::abs(f.b(n)));
  }
  const double margin = params.kappa() - sum;
  if (margin > kStrictSlack) {
    return {Verdict::member_certified, std::nullopt, margin};
  }
  return {Verdict::inconclusive, std::nullopt, margin};
}

MembershipVerdict sampled_membership(const HarmonicSeries& f,
                                     const ClassParams& params, int n_radii,
                                     int n_angles, int eps_count) {
  if (n_radii < 1 || n_angles < 1 || eps_count < 1) {
    throw ArgumentOutOfRange("grid sizes must be >= 1");
  }
  const double m = params.m();

  double margin_min = std::numeric_limits<double>::infinity();
  Complex argmin{};
  for (int i = 1; i <= n_radii; ++i) {
    const double r = (static_cast<double>(i) / (n_radii + 1)) * kDefaultRCap;
    for (int j = 0; j < n_angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / n_angles;
      const Complex z = std::polar(r, theta);
      const Complex lh = apply_L(f.analytic_part(), params, z);
      const Complex lg = apply_L_coanalytic(f, params, z);
      // Defining margin; the sampled-eps slice margins below can only sit
      // above it, they are swept as a cross-check of the slice criterion.
      double margin = lh.real() + m - std::abs(lg);
      for (int k = 0; k < eps_count; ++k) {
        const Complex eps =
            std::polar(1.0, 2.0 * std::numbers::pi * k / eps_count);
        margin = std::min(margin, (lh + eps * lg).real() + m);
      }
      if (margin < margin_min) {
        margin_min = margin;
        argmin = z;
      }
    }
  }

  if (margin_min < -kStrictSlack) {
    return {Verdict::not_member_witness, Witness{argmin, margin_min},
            margin_min};
  }
  return {Verdict::inconclusive, std::nullopt, margin_min};
}

bool convex_null_condition(const ClassParams& params) {
  const double alpha = params.alpha();
  return params.kappa() <= 3.0 * (1.0 + alpha) / (6.0 * alpha + 4.0);
}

bool convex_null_sequence_check(const ClassParams& params, int prefix_len) {
  if (prefix_len < 4) {
    throw ArgumentOutOfRange("prefix_len must be >= 4");
  }
  std::vector<double> c(static_cast<std::size_t>(prefix_len) + 1);
  c[0] = 1.0;
  for (int n = 2; n <= prefix_len + 1; ++n) {
    c[static_cast<std::size_t>(n) - 1] = an_sum_bound(n, params);
  }
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const double diff = c[i] - c[i + 1];
    if (diff < 0.0) return false;
    if (i + 2 < c.size() && diff < c[i + 1] - c[i + 2]) return false;
  }
  return true;
}

GridMinimum re_half_check(const AnalyticSeries& F, int n_radii, int n_angles) {
  if (n_radii < 1 || n_angles < 1) {
    throw ArgumentOutOfRange("grid sizes must be >= 1");
  }
  double min_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n_radii; ++i) {
    const double r = (static_cast<double>(i) / (n_radii + 1)) * kDefaultRCap;
    for (int j = 0; j < n_angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / n_angles;
      const Complex z = std::polar(r, theta);
      // F(z)/z = 1 + Sum c_n z^{n-1}
      Complex acc = 0.0;
      const auto tail = F.tail();
      for (std::size_t k = tail.size(); k-- > 0;) {
        acc = acc * z + tail[k];
      }
      min_value = std::min(min_value, (1.0 + z * acc).real());
    }
  }
  return {min_value > 0.5, min_value};
}

HarmonicSeries random_member(const ClassParams& params, std::mt19937_64& rng,
                             int max_n) {
  if (max_n < 2 || max_n > kMaxDegree) {
    throw ArgumentOutOfRange("max_n must lie in [2, " +
                             std::to_string(kMaxDegree) + "]");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t len = static_cast<std::size_t>(max_n) - 1;
  std::vector<Complex> a(len), b(len);
  double sum = 0.0;
  for (int n = 2; n <= max_n; ++n) {
    const Complex an{gauss(rng), gauss(rng)};
    const Complex bn{gauss(rng), gauss(rng)};
    a[static_cast<std::size_t>(n) - 2] = an;
    b[static_cast<std::size_t>(n) - 2] = bn;
    sum += weight(n, params) * (std::abs(an) + std::abs(bn));
  }
  std::uniform_real_distribution<double> rho_dist(0.1, 0.9);
  const double scale = rho_dist(rng) * params.kappa() / sum;
  for (auto& v : a) v *= scale;
  for (auto& v : b) v *= scale;
  return HarmonicSeries(AnalyticSeries(std::move(a)), std::move(b));
}

}  // namespace pham
