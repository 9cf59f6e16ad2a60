#pragma once

#include "pham/errors.hpp"

namespace pham {

/// Largest series argument this library ever evaluates; keeps every
/// evaluation away from the r -> 1 singularity.
inline constexpr double kDefaultRCap = 1.0 - 1e-9;

/// The parameter pair (alpha, M) of the mapping class, with
/// kappa = M - alpha + 1. Construction rejects alpha outside (0, 1]
/// and M <= 0.
class ClassParams {
 public:
  ClassParams(double alpha, double m);

  double alpha() const { return alpha_; }
  double m() const { return m_; }
  double kappa() const { return kappa_; }

 private:
  double alpha_;
  double m_;
  double kappa_;
};

/// Controls for truncated series evaluation.
struct SeriesEvalConfig {
  double tolerance = 1e-12;  // absolute truncation error target
  int max_terms = 1'000'000;
  double r_cap = kDefaultRCap;

  /// Throws ArgumentOutOfRange unless
  /// tolerance >= 1e-15, 0 < max_terms <= 1e7, 0 < r_cap <= 1 - 1e-9.
  void validate() const;
};

}  // namespace pham
