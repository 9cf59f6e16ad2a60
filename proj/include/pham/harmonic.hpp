#pragma once

#include <complex>
#include <span>
#include <vector>

#include "pham/params.hpp"

namespace pham {

using Complex = std::complex<double>;

/// Maximum representable truncation degree N.
inline constexpr int kMaxDegree = 10'000;

/// Truncated normalized analytic function
///   u(z) = z + c_2 z^2 + ... + c_N z^N.
/// The normalization c_0 = 0, c_1 = 1 is structural and never stored;
/// only the tail (c_2, ..., c_N) is kept. An empty tail is the identity
/// (degree N = 1).
class AnalyticSeries {
 public:
  AnalyticSeries() = default;
  explicit AnalyticSeries(std::vector<Complex> tail);

  /// u(z) = z + value * z^n, zeros elsewhere. Requires 2 <= n <= kMaxDegree.
  static AnalyticSeries single_term(int n, Complex value);

  int degree() const { return static_cast<int>(tail_.size()) + 1; }

  /// c_n for n >= 2; zero beyond the stored degree.
  Complex coeff(int n) const;

  std::span<const Complex> tail() const { return tail_; }

 private:
  std::vector<Complex> tail_;  // tail_[k] = c_{k+2}
};

/// Truncated normalized harmonic mapping f = h + conj(g) with
///   h(z) = z + Sum a_n z^n,  g(z) = Sum b_n z^n  (n = 2..N).
/// Both parts share one degree; the shorter tail is zero-padded.
class HarmonicSeries {
 public:
  HarmonicSeries() = default;  // the identity, f(z) = z
  HarmonicSeries(AnalyticSeries h, std::vector<Complex> g_tail);

  /// f(z) = z + a * z^n + conj(b * z^n). Requires 2 <= n <= kMaxDegree.
  static HarmonicSeries single_term(int n, Complex a, Complex b);

  int degree() const { return h_.degree(); }

  const AnalyticSeries& analytic_part() const { return h_; }
  std::span<const Complex> co_tail() const { return g_tail_; }

  Complex a(int n) const { return h_.coeff(n); }
  Complex b(int n) const;

 private:
  AnalyticSeries h_;
  std::vector<Complex> g_tail_;  // g_tail_[k] = b_{k+2}, same length as h tail
};

/// f(z) = h(z) + conj(g(z)). Requires |z| < 1.
Complex eval(const HarmonicSeries& f, Complex z);

/// L_alpha u(z) = (1-alpha) u'(z) + alpha z u''(z) for a normalized analytic
/// series (unit linear term): (1-alpha) + Sum_{n>=2} w_n c_n z^{n-1}.
Complex apply_L(const AnalyticSeries& u, const ClassParams& params, Complex z);

/// L_alpha applied to the co-analytic part of f (no linear term):
/// Sum_{n>=2} w_n b_n z^{n-1}.
Complex apply_L_coanalytic(const HarmonicSeries& f, const ClassParams& params,
                           Complex z);

/// The slice F_eps = h + eps g, coefficients a_n + eps b_n. Requires
/// |eps| = 1 within 1e-12.
AnalyticSeries epsilon_slice(const HarmonicSeries& f, Complex eps);

/// Coefficientwise (Hadamard) products. Result degree is the smaller of the
/// input degrees.
HarmonicSeries convolve_harmonic(const HarmonicSeries& f1,
                                 const HarmonicSeries& f2);

/// Both parts of f convolved against the analytic phi.
HarmonicSeries convolve_tilde(const HarmonicSeries& f,
                              const AnalyticSeries& phi);

/// f * (phi + beta conj(phi)): analytic part h*phi, co-analytic coefficients
/// conj(beta) b_n c_n. Requires |beta| = 1 within 1e-12.
HarmonicSeries convolve_rotation(const HarmonicSeries& f,
                                 const AnalyticSeries& phi, Complex beta);

/// Sum t_i f_i with t_i >= 0, Sum t_i = 1 within 1e-12.
HarmonicSeries convex_combination(std::span<const HarmonicSeries> fs,
                                  std::span<const double> ts);

}  // namespace pham
