#pragma once

#include "pham/params.hpp"

namespace pham {

/// Partial sum of the restricted hypergeometric series together with the
/// certified bound on everything omitted. After summing terms 0..terms-1,
/// the true value lies in [value, value + tail_bound] up to rounding.
struct SeriesSum {
  double value;
  double tail_bound;
  int terms;
};

/// Sums 2F1(1, 1/alpha; 1+1/alpha; r) = Sum_{n>=0} r^n / (1 + alpha n),
/// stopping as soon as the geometric tail bound
/// r^{N+1} / ((1 + alpha N)(1 - r)) meets cfg.tolerance or the term budget
/// runs out. Never throws on budget exhaustion; callers that need a
/// certified value must inspect tail_bound.
SeriesSum hyp2f1_partial(const ClassParams& params, double r,
                         const SeriesEvalConfig& cfg);

/// 2F1(1, 1/alpha; 1+1/alpha; r) certified to cfg.tolerance.
/// Throws ArgumentOutOfRange for r outside [0, r_cap], BudgetExceeded when
/// max_terms is reached before the tail bound meets tolerance.
double hyp2f1_special(const ClassParams& params, double r,
                      const SeriesEvalConfig& cfg = {});

/// Coefficient weight w_n = n + alpha n (n-2) = n (1 + alpha (n-2)) of the
/// operator L_alpha on normalized series. Requires n >= 2.
double weight(int n, const ClassParams& params);

enum class AlphaKind { one, half };

/// Logarithmic closed forms of hyp2f1_special at alpha = 1 and alpha = 1/2:
///   one:  -ln(1-r)/r            (limit 1 at r = 0)
///   half: (2/r^2)(-ln(1-r) - r) (limit 1 at r = 0)
/// Independent oracle for the series path.
double log_closed_form(AlphaKind kind, double r, double r_cap = kDefaultRCap);

}  // namespace pham
