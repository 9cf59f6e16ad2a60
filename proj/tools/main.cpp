// Command-line front end: radius solving, Table 1 reproduction, curve and
// growth CSV emission, SVG plots, membership checks, convolution and
// extremal-function generation on coefficient CSV files.
//
// Exit codes: 0 success, 1 usage or file-format error, 2 numeric failure,
// 4 strict-mode membership rejection.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pham/bounds.hpp"
#include "pham/coeff_csv.hpp"
#include "pham/harmonic.hpp"
#include "pham/radii.hpp"
#include "pham/specfun.hpp"
#include "pham/svg_chart.hpp"

namespace {

using namespace pham;

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitStrictReject = 4;

struct Fmt {
  bool full = false;
  std::string operator()(double v) const {
    char buf[40];
    std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.9g", v);
    return buf;
  }
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Stream sink: stdout by default, a file when --out is given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Complex parse_complex_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ArgumentOutOfRange("expected 're,im', got '" + text + "'");
  }
  const auto parse = [&](std::string_view part) {
    double v = 0.0;
    const auto [p, ec] =
        std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size()) {
      throw ArgumentOutOfRange("not a number: '" + std::string(part) + "'");
    }
    return v;
  };
  return {parse(std::string_view(text).substr(0, comma)),
          parse(std::string_view(text).substr(comma + 1))};
}

// ---------------------------------------------------------------------------
// radii / table1

void run_radii(double alpha, double m, double tol, bool csv, const Fmt& num,
               const std::string& out_path) {
  const ClassParams p(alpha, m);
  const RadiiResult res = solve_radii(p, tol);
  OutputTarget out(out_path);
  out.stream() << "# alpha=" << num(alpha) << " m=" << num(m)
               << " tol=" << num(tol) << "\n";
  if (csv) {
    out.stream() << "alpha,M,r_star,r_c\n"
                 << num(alpha) << ',' << num(m) << ',' << num(res.r_star)
                 << ',' << num(res.r_c) << "\n";
  } else {
    out.stream() << "r_star=" << num(res.r_star) << " r_c=" << num(res.r_c)
                 << "\n";
  }
}

void run_table1(double tol, const Fmt& num, const std::string& out_path) {
  static constexpr double kAlphas[] = {1.0,  0.5,  0.5,  1.0 / 3.0,
                                       0.75, 0.75, 0.25};
  static constexpr double kMs[] = {0.5, 0.25, 2.0, 1.0 / 9.0, 0.01, 0.1, 0.2};
  OutputTarget out(out_path);
  out.stream() << "# tol=" << num(tol) << "\n";
  out.stream() << "alpha,M,r_star,r_c\n";
  for (int i = 0; i < 7; ++i) {
    const ClassParams p(kAlphas[i], kMs[i]);
    const RadiiResult res = solve_radii(p, tol);
    out.stream() << num(kAlphas[i]) << ',' << num(kMs[i]) << ','
                 << num(res.r_star) << ',' << num(res.r_c) << "\n";
  }
}

// ---------------------------------------------------------------------------
// curve / plot / growth

void run_curve(const std::string& which, double alpha, double m, double r_min,
               double r_max, int steps, const Fmt& num,
               const std::string& out_path) {
  const ClassParams p(alpha, m);
  const auto samples = curve(p, r_min, r_max, steps);
  OutputTarget out(out_path);
  out.stream() << "# alpha=" << num(alpha) << " m=" << num(m)
               << " rmin=" << num(r_min) << " rmax=" << num(r_max)
               << " steps=" << steps << "\n";
  const bool want_g1 = which != "g2";
  const bool want_g2 = which != "g1";
  out.stream() << "r";
  if (want_g1) out.stream() << ",G1";
  if (want_g2) out.stream() << ",G2";
  out.stream() << "\n";
  for (const auto& s : samples) {
    out.stream() << fmt17(s.r);
    if (want_g1) out.stream() << ',' << fmt17(s.g1);
    if (want_g2) out.stream() << ',' << fmt17(s.g2);
    out.stream() << "\n";
  }
}

void run_plot(const std::vector<double>& alphas, const std::vector<double>& ms,
              const std::string& which, const Fmt& num,
              const std::string& out_path) {
  if (alphas.empty() || alphas.size() != ms.size()) {
    throw ArgumentOutOfRange(
        "plot needs matching --alpha/--m pairs (at least one)");
  }
  constexpr int kSamples = 200;
  constexpr double kRMax = 0.95;
  std::vector<ChartSeries> series(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const ClassParams p(alphas[i], ms[i]);
    series[i].label = "alpha=" + num(alphas[i]) + ", M=" + num(ms[i]);
    series[i].points.reserve(kSamples);
    for (int k = 0; k < kSamples; ++k) {
      const double r = kRMax * k / (kSamples - 1);
      const double v = which == "g2" ? g2(p, r) : g1(p, r);
      series[i].points.push_back({r, v});
    }
  }
  std::string metadata = "which=" + which;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    metadata += " alpha=" + num(alphas[i]) + " m=" + num(ms[i]);
  }
  const std::string svg = render_line_chart(
      series, "r", which == "g2" ? "G2(r)" : "G1(r)", metadata);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + out_path);
  file << svg;
}

void run_growth(double alpha, double m, int samples, const Fmt& num,
                const std::string& out_path) {
  if (samples < 2) throw ArgumentOutOfRange("--samples must be >= 2");
  const ClassParams p(alpha, m);
  constexpr double kRMax = 0.95;
  OutputTarget out(out_path);
  out.stream() << "# alpha=" << num(alpha) << " m=" << num(m)
               << " samples=" << samples << "\n";
  out.stream() << "r,lower,upper\n";
  for (int k = 0; k < samples; ++k) {
    const double r = kRMax * k / (samples - 1);
    const GrowthEnvelope env = growth_envelope(p, r);
    out.stream() << num(r) << ',' << num(env.lower) << ',' << num(env.upper)
                 << "\n";
  }
}

// ---------------------------------------------------------------------------
// check / convolve / extremal

int run_check(const std::string& path, double alpha, double m,
              const std::string& mode, bool strict, const Fmt& num) {
  const ClassParams p(alpha, m);
  const HarmonicSeries f = read_coeff_file(path);
  std::cout << "# alpha=" << num(alpha) << " m=" << num(m) << " mode=" << mode
            << (strict ? " strict=1" : " strict=0") << "\n";
  bool rejected = false;
  const auto report = [&](const char* name, const MembershipVerdict& v) {
    std::cout << name << ": " << to_string(v.verdict)
              << " margin_min=" << num(v.margin_min);
    if (v.witness) {
      std::cout << " witness=(" << num(v.witness->z.real()) << ','
                << num(v.witness->z.imag())
                << ") margin=" << num(v.witness->margin);
    }
    std::cout << "\n";
    rejected = rejected || v.verdict == Verdict::not_member_witness;
  };
  if (mode == "sufficient" || mode == "both") {
    report("sufficient", sufficient_membership(f, p));
  }
  if (mode == "sampled" || mode == "both") {
    report("sampled", sampled_membership(f, p));
  }
  return (strict && rejected) ? kExitStrictReject : 0;
}

void run_convolve(const std::string& file1, const std::string& file2,
                  const std::string& out_path, const std::string& mode,
                  const std::optional<std::string>& beta_text) {
  const HarmonicSeries f1 = read_coeff_file(file1);
  const HarmonicSeries f2 = read_coeff_file(file2);

  std::vector<std::string> comments = {"mode=" + mode};
  HarmonicSeries result;
  if (mode == "harmonic") {
    result = convolve_harmonic(f1, f2);
  } else {
    for (const Complex& b : f2.co_tail()) {
      if (b != Complex{}) {
        throw ArgumentOutOfRange(
            "file2 must be analytic (all-zero b columns) in mode " + mode);
      }
    }
    const AnalyticSeries phi = f2.analytic_part();
    if (mode == "tilde") {
      result = convolve_tilde(f1, phi);
    } else {  // rotation
      if (!beta_text) {
        throw ArgumentOutOfRange("rotation mode requires --beta re,im");
      }
      const Complex beta = parse_complex_pair(*beta_text);
      result = convolve_rotation(f1, phi, beta);
      comments.push_back("beta=" + fmt17(beta.real()) + "," +
                         fmt17(beta.imag()));
    }
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file: " + out_path);
  write_coeff_csv(out, result, comments);
}

void run_extremal(const std::string& kind, std::optional<int> n,
                  std::optional<int> degree, double alpha, double m,
                  const std::string& out_path, const Fmt& num) {
  const ClassParams p(alpha, m);
  HarmonicSeries f;
  std::vector<std::string> comments;
  if (kind == "coanalytic") {
    if (!n) throw ArgumentOutOfRange("--kind coanalytic requires --n");
    f = extremal_coanalytic(*n, p);
    comments.push_back("kind=coanalytic n=" + std::to_string(*n) +
                       " alpha=" + num(alpha) + " m=" + num(m));
  } else {
    if (!degree) throw ArgumentOutOfRange("--kind analytic requires --degree");
    f = extremal_analytic(p, *degree);
    comments.push_back("kind=analytic degree=" + std::to_string(*degree) +
                       " alpha=" + num(alpha) + " m=" + num(m));
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file: " + out_path);
  write_coeff_csv(out, f, comments);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in a class of planar harmonic mappings"};
  app.require_subcommand(1);

  Fmt num;
  app.add_flag("--full-precision", num.full,
               "print 17 significant digits instead of 9");

  // radii
  auto* radii_cmd = app.add_subcommand(
      "radii", "solve the radii of starlikeness and convexity");
  double r_alpha = 0, r_m = 0, r_tol = 1e-10;
  bool r_csv = false;
  std::string r_out;
  radii_cmd->add_option("--alpha", r_alpha)->required();
  radii_cmd->add_option("--m", r_m)->required();
  radii_cmd->add_option("--tol", r_tol);
  radii_cmd->add_flag("--csv", r_csv, "emit CSV instead of the text line");
  radii_cmd->add_option("--out", r_out);

  // table1
  auto* table_cmd =
      app.add_subcommand("table1", "radii for the seven reference pairs");
  double t_tol = 1e-10;
  std::string t_out;
  table_cmd->add_option("--tol", t_tol);
  table_cmd->add_option("--out", t_out);

  // curve
  auto* curve_cmd =
      app.add_subcommand("curve", "sample G1/G2 on a uniform grid (CSV)");
  std::string c_which = "both", c_out;
  double c_alpha = 0, c_m = 0, c_rmin = 0.0, c_rmax = 0.9;
  int c_steps = 50;
  curve_cmd->add_option("--which", c_which)
      ->check(CLI::IsMember({"g1", "g2", "both"}));
  curve_cmd->add_option("--alpha", c_alpha)->required();
  curve_cmd->add_option("--m", c_m)->required();
  curve_cmd->add_option("--rmin", c_rmin);
  curve_cmd->add_option("--rmax", c_rmax);
  curve_cmd->add_option("--steps", c_steps);
  curve_cmd->add_option("--out", c_out);

  // plot
  auto* plot_cmd =
      app.add_subcommand("plot", "render G1 or G2 curves to an SVG file");
  std::vector<double> p_alphas, p_ms;
  std::string p_which = "g1", p_out;
  plot_cmd->add_option("--alpha", p_alphas, "may repeat");
  plot_cmd->add_option("--m", p_ms, "may repeat");
  plot_cmd->add_option("--which", p_which)->check(CLI::IsMember({"g1", "g2"}));
  plot_cmd->add_option("--out", p_out)->required();

  // growth
  auto* growth_cmd =
      app.add_subcommand("growth", "growth envelope samples (CSV)");
  double g_alpha = 0, g_m = 0;
  int g_samples = 20;
  std::string g_out;
  growth_cmd->add_option("--alpha", g_alpha)->required();
  growth_cmd->add_option("--m", g_m)->required();
  growth_cmd->add_option("--samples", g_samples);
  growth_cmd->add_option("--out", g_out);

  // check
  auto* check_cmd =
      app.add_subcommand("check", "membership tests on a coefficient file");
  std::string k_file, k_mode = "both";
  double k_alpha = 0, k_m = 0;
  bool k_strict = false;
  check_cmd->add_option("--file", k_file)->required();
  check_cmd->add_option("--alpha", k_alpha)->required();
  check_cmd->add_option("--m", k_m)->required();
  check_cmd->add_option("--mode", k_mode)
      ->check(CLI::IsMember({"sufficient", "sampled", "both"}));
  check_cmd->add_flag("--strict", k_strict,
                      "exit 4 when a non-membership witness is found");

  // convolve
  auto* conv_cmd =
      app.add_subcommand("convolve", "convolve two coefficient files");
  std::string v_file1, v_file2, v_out, v_mode = "harmonic";
  std::optional<std::string> v_beta;
  conv_cmd->add_option("--file1", v_file1)->required();
  conv_cmd->add_option("--file2", v_file2)->required();
  conv_cmd->add_option("--out", v_out)->required();
  conv_cmd->add_option("--mode", v_mode)
      ->check(CLI::IsMember({"harmonic", "tilde", "rotation"}));
  conv_cmd->add_option("--beta", v_beta, "unit-modulus re,im for rotation");

  // extremal
  auto* ext_cmd = app.add_subcommand(
      "extremal", "emit a bound-attaining function as a coefficient file");
  std::string e_kind, e_out;
  std::optional<int> e_n, e_degree;
  double e_alpha = 0, e_m = 0;
  ext_cmd->add_option("--kind", e_kind)
      ->required()
      ->check(CLI::IsMember({"analytic", "coanalytic"}));
  ext_cmd->add_option("--n", e_n);
  ext_cmd->add_option("--degree", e_degree);
  ext_cmd->add_option("--alpha", e_alpha)->required();
  ext_cmd->add_option("--m", e_m)->required();
  ext_cmd->add_option("--out", e_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (radii_cmd->parsed()) {
      run_radii(r_alpha, r_m, r_tol, r_csv, num, r_out);
    } else if (table_cmd->parsed()) {
      run_table1(t_tol, num, t_out);
    } else if (curve_cmd->parsed()) {
      run_curve(c_which, c_alpha, c_m, c_rmin, c_rmax, c_steps, num, c_out);
    } else if (plot_cmd->parsed()) {
      run_plot(p_alphas, p_ms, p_which, num, p_out);
    } else if (growth_cmd->parsed()) {
      run_growth(g_alpha, g_m, g_samples, num, g_out);
    } else if (check_cmd->parsed()) {
      return run_check(k_file, k_alpha, k_m, k_mode, k_strict, num);
    } else if (conv_cmd->parsed()) {
      run_convolve(v_file1, v_file2, v_out, v_mode, v_beta);
    } else if (ext_cmd->parsed()) {
      run_extremal(e_kind, e_n, e_degree, e_alpha, e_m, e_out, num);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const BracketFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    // argument/format/modulus/weight violations and CSV schema errors
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
