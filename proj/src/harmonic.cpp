#include "pham/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pham/specfun.hpp"

namespace pham {

namespace {

void check_degree(std::size_t tail_len) {
  if (tail_len + 1 > static_cast<std::size_t>(kMaxDegree)) {
    throw ArgumentOutOfRange("series degree exceeds " +
                             std::to_string(kMaxDegree));
  }
}

void check_unit_modulus(Complex v, const char* name) {
  if (std::fabs(std::abs(v) - 1.0) > 1e-12) {
    throw NotUnitModulus(std::string(name) + " must have unit modulus");
  }
}

// Horner evaluation of Sum_k tail[k] z^k.
Complex horner(std::span<const Complex> tail, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = tail.size(); k-- > 0;) {
    acc = acc * z + tail[k];
  }
  return acc;
}

void check_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw ArgumentOutOfRange("z must lie in the open unit disk");
  }
}

}  // namespace

AnalyticSeries::AnalyticSeries(std::vector<Complex> tail)
    : tail_(std::move(tail)) {
  check_degree(tail_.size());
}

AnalyticSeries AnalyticSeries::single_term(int n, Complex value) {
  if (n < 2 || n > kMaxDegree) {
    throw ArgumentOutOfRange("term index must lie in [2, " +
                             std::to_string(kMaxDegree) + "]");
  }
  std::vector<Complex> tail(static_cast<std::size_t>(n) - 1, Complex{});
  tail[static_cast<std::size_t>(n) - 2] = value;
  return AnalyticSeries(std::move(tail));
}

Complex AnalyticSeries::coeff(int n) const {
  if (n < 2) {
    throw ArgumentOutOfRange("coefficient index must be >= 2");
  }
  const std::size_t k = static_cast<std::size_t>(n) - 2;
  return k < tail_.size() ? tail_[k] : Complex{};
}

HarmonicSeries::HarmonicSeries(AnalyticSeries h, std::vector<Complex> g_tail)
    : h_(std::move(h)), g_tail_(std::move(g_tail)) {
  check_degree(g_tail_.size());
  // Zero-pad the shorter part so both share one degree.
  const std::size_t len =
      std::max(h_.tail().size(), g_tail_.size());
  if (h_.tail().size() < len) {
    std::vector<Complex> ht(h_.tail().begin(), h_.tail().end());
    ht.resize(len, Complex{});
    h_ = AnalyticSeries(std::move(ht));
  }
  g_tail_.resize(len, Complex{});
}

HarmonicSeries HarmonicSeries::single_term(int n, Complex a, Complex b) {
  HarmonicSeries f(AnalyticSeries::single_term(n, a),
                   std::vector<Complex>(static_cast<std::size_t>(n) - 1));
  f.g_tail_[static_cast<std::size_t>(n) - 2] = b;
  return f;
}

Complex HarmonicSeries::b(int n) const {
  if (n < 2) {
    throw ArgumentOutOfRange("coefficient index must be >= 2");
  }
  const std::size_t k = static_cast<std::size_t>(n) - 2;
  return k < g_tail_.size() ? g_tail_[k] : Complex{};
}

Complex eval(const HarmonicSeries& f, Complex z) {
  check_in_disk(z);
  const Complex h = z + z * z * horner(f.analytic_part().tail(), z);
  const Complex g = z * z * horner(f.co_tail(), z);
  return h + std::conj(g);
}

namespace {

// Sum_{n>=2} w_n c_n z^{n-1} = z * Horner over w_{k+2} c_{k+2}.
Complex weighted_derivative_sum(std::span<const Complex> tail,
                                const ClassParams& params, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = tail.size(); k-- > 0;) {
    acc = acc * z + weight(static_cast<int>(k) + 2, params) * tail[k];
  }
  return z * acc;
}

}  // namespace

Complex apply_L(const AnalyticSeries& u, const ClassParams& params, Complex z) {
  check_in_disk(z);
  return (1.0 - params.alpha()) + weighted_derivative_sum(u.tail(), params, z);
}

Complex apply_L_coanalytic(const HarmonicSeries& f, const ClassParams& params,
                           Complex z) {
  check_in_disk(z);
  return weighted_derivative_sum(f.co_tail(), params, z);
}

AnalyticSeries epsilon_slice(const HarmonicSeries& f, Complex eps) {
  check_unit_modulus(eps, "eps");
  const auto a = f.analytic_part().tail();
  const auto b = f.co_tail();
  std::vector<Complex> tail(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    tail[k] = a[k] + eps * b[k];
  }
  return AnalyticSeries(std::move(tail));
}

namespace {

std::vector<Complex> hadamard(std::span<const Complex> x,
                              std::span<const Complex> y) {
  const std::size_t len = std::min(x.size(), y.size());
  std::vector<Complex> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = x[k] * y[k];
  return out;
}

}  // namespace

HarmonicSeries convolve_harmonic(const HarmonicSeries& f1,
                                 const HarmonicSeries& f2) {
  auto a = hadamard(f1.analytic_part().tail(), f2.analytic_part().tail());
  auto b = hadamard(f1.co_tail(), f2.co_tail());
  return HarmonicSeries(AnalyticSeries(std::move(a)), std::move(b));
}

HarmonicSeries convolve_tilde(const HarmonicSeries& f,
                              const AnalyticSeries& phi) {
  auto a = hadamard(f.analytic_part().tail(), phi.tail());
  auto b = hadamard(f.co_tail(), phi.tail());
  return HarmonicSeries(AnalyticSeries(std::move(a)), std::move(b));
}

HarmonicSeries convolve_rotation(const HarmonicSeries& f,
                                 const AnalyticSeries& phi, Complex beta) {
  check_unit_modulus(beta, "beta");
  auto a = hadamard(f.analytic_part().tail(), phi.tail());
  auto b = hadamard(f.co_tail(), phi.tail());
  for (auto& v : b) v *= std::conj(beta);
  return HarmonicSeries(AnalyticSeries(std::move(a)), std::move(b));
}

HarmonicSeries convex_combination(std::span<const HarmonicSeries> fs,
                                  std::span<const double> ts) {
  if (fs.empty()) {
    throw ArgumentOutOfRange("convex combination needs at least one function");
  }
  if (fs.size() != ts.size()) {
    throw ArgumentOutOfRange("weight count must match function count");
  }
  double total = 0.0;
  for (double t : ts) {
    if (!(t >= 0.0)) throw NotConvexWeights("weights must be nonnegative");
    total += t;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw NotConvexWeights("weights must sum to 1");
  }

  std::size_t len = 0;
  for (const auto& f : fs) {
    len = std::max(len, f.analytic_part().tail().size());
  }
  std::vector<Complex> a(len), b(len);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto at = fs[i].analytic_part().tail();
    const auto bt = fs[i].co_tail();
    for (std::size_t k = 0; k < at.size(); ++k) {
      a[k] += ts[i] * at[k];
      b[k] += ts[i] * bt[k];
    }
  }
  return HarmonicSeries(AnalyticSeries(std::move(a)), std::move(b));
}

}  // namespace pham
