#pragma once

#include <optional>
#include <random>

#include "pham/harmonic.hpp"
#include "pham/params.hpp"

namespace pham {

/// Sharp bound on |b_n|: kappa / w_n. Requires n >= 2.
double bn_bound(int n, const ClassParams& params);

/// Sharp bound on |a_n| + |b_n| (and on ||a_n|-|b_n|| and |a_n| alone):
/// 2 kappa / w_n. Requires n >= 2.
double an_sum_bound(int n, const ClassParams& params);

/// z + bn_bound(n) conj(z^n): the map attaining bn_bound with equality.
HarmonicSeries extremal_coanalytic(int n, const ClassParams& params);

/// z + Sum_{n=2}^{degree} an_sum_bound(n) z^n: the map attaining the growth
/// upper envelope, truncated at `degree`.
HarmonicSeries extremal_analytic(const ClassParams& params, int degree);

/// Two-sided bound on |f(radius e^{i theta})| over the class:
///   upper = r + 2 kappa Sum_{n>=2} r^n / (n (1 + alpha (n-2)))
///   lower = r + 2 kappa Sum_{n>=2} (-1)^{n-1} r^n / (n (1 + alpha (n-2)))
struct GrowthEnvelope {
  double radius;
  double lower;
  double upper;
  int terms_used;
};

GrowthEnvelope growth_envelope(const ClassParams& params, double radius,
                               const SeriesEvalConfig& cfg = {});

enum class Verdict { member_certified, not_member_witness, inconclusive };

const char* to_string(Verdict v);

struct Witness {
  Complex z;
  double margin;
};

struct MembershipVerdict {
  Verdict verdict;
  std::optional<Witness> witness;  // present iff not_member_witness
  double margin_min;
};

/// Coefficient test Sum w_n (|a_n| + |b_n|) < kappa. Certifies membership
/// when it holds strictly; the condition is sufficient, not necessary, so
/// failure reports inconclusive. margin_min = kappa - Sum.
MembershipVerdict sufficient_membership(const HarmonicSeries& f,
                                        const ClassParams& params);

/// Samples the defining margin Re(L_alpha h) + M - |L_alpha g| on the grid
/// r_i = i/(n_radii+1) * r_cap, theta_j = 2 pi j / n_angles, plus the slice
/// margins Re(L_alpha(h + eps g)) + M over eps_count unit eps. Any sampled
/// margin below -1e-12 is a witness of non-membership; sampling a necessary
/// condition can never certify membership, so the other outcome is
/// inconclusive. Ties in the minimizing witness break lexicographically on
/// (i, j).
MembershipVerdict sampled_membership(const HarmonicSeries& f,
                                     const ClassParams& params,
                                     int n_radii = 24, int n_angles = 48,
                                     int eps_count = 8);

/// kappa <= 3(1+alpha)/(6 alpha + 4), the parameter range on which the
/// convolution closure theorems apply.
bool convex_null_condition(const ClassParams& params);

/// Builds the prefix c_0 = 1, c_{n-1} = 2 kappa / w_n (n >= 2) and checks
/// the convex-null-sequence inequalities
/// c_0 - c_1 >= c_1 - c_2 >= ... >= 0 over it. Agrees with
/// convex_null_condition for prefix_len >= 4. Requires prefix_len >= 4.
bool convex_null_sequence_check(const ClassParams& params, int prefix_len);

struct GridMinimum {
  bool holds;  // min_value > 1/2
  double min_value;
};

/// Minimum of Re(F(z)/z) = Re(1 + Sum c_n z^{n-1}) over the standard grid.
GridMinimum re_half_check(const AnalyticSeries& F, int n_radii = 24,
                          int n_angles = 48);

/// Random class member: complex gaussian coefficients for 2 <= n <= max_n,
/// rescaled so that Sum w_n (|a_n| + |b_n|) = rho kappa with rho uniform in
/// (0.1, 0.9). Every output passes sufficient_membership.
HarmonicSeries random_member(const ClassParams& params, std::mt19937_64& rng,
                             int max_n = 16);

}  // namespace pham
