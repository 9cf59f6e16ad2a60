#include "pham/params.hpp"

#include <cassert>
#include <string>

namespace pham {

ClassParams::ClassParams(double alpha, double m) : alpha_(alpha), m_(m) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ArgumentOutOfRange("alpha must lie in (0, 1]; got " +
                             std::to_string(alpha));
  }
  if (!(m > 0.0)) {
    throw ArgumentOutOfRange("M must be positive; got " + std::to_string(m));
  }
  kappa_ = m_ - alpha_ + 1.0;
  assert(kappa_ > 0.0);
}

void SeriesEvalConfig::validate() const {
  if (!(tolerance >= 1e-15)) {
    throw ArgumentOutOfRange("tolerance must be >= 1e-15");
  }
  if (!(max_terms > 0 && max_terms <= 10'000'000)) {
    throw ArgumentOutOfRange("max_terms must lie in [1, 1e7]");
  }
  if (!(r_cap > 0.0 && r_cap <= 1.0 - 1e-9)) {
    throw ArgumentOutOfRange("r_cap must lie in (0, 1 - 1e-9]");
  }
}

}  // namespace pham
