#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pham/bounds.hpp"
#include "pham/radii.hpp"
#include "support.hpp"

using namespace pham;
using testsup::near;

namespace {

// Seven reference parameter pairs with their published radii.
struct TableRow {
  double alpha, m, r_star, r_c;
};
constexpr TableRow kTable[] = {
    {1.0, 0.5, 0.632121, 0.357799},       {0.5, 0.25, 0.454395, 0.25},
    {0.5, 2.0, 0.176134, 0.0909091},      {1.0 / 3.0, 1.0 / 9.0, 0.42966, 0.237029},
    {0.75, 0.01, 0.823912, 0.515173},     {0.75, 0.1, 0.732081, 0.436194},
    {0.25, 0.2, 0.368607, 0.200939},
};

}  // namespace

TEST_CASE("g1 and g2 at r = 0") {
  const ClassParams p(1.0, 0.5);
  CHECK(g1(p, 0.0) == -1.0);  // -alpha/(2 kappa)
  CHECK(g2(p, 0.0) == -1.0);
  const ClassParams q(0.5, 0.25);
  CHECK(near(g1(q, 0.0), -1.0 / 3.0, 1e-15));
}

TEST_CASE("g1 closed-form zero at alpha = 1") {
  // G1 = -ln(1-r) - 1 vanishes at r = 1 - 1/e
  const ClassParams p(1.0, 0.5);
  CHECK(near(g1(p, 1.0 - 1.0 / std::exp(1.0)), 0.0, 1e-9));
}

TEST_CASE("g1/g2 vanish at the published radii") {
  CHECK(std::abs(g1(ClassParams(0.5, 0.25), 0.454395)) < 1e-5);
  CHECK(near(g2(ClassParams(0.5, 0.25), 0.25), 0.0, 1e-12));
  CHECK(near(g2(ClassParams(0.5, 2.0), 1.0 / 11.0), 0.0, 1e-12));
}

TEST_CASE("closed form vs derivation-route series") {
  for (double alpha : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    for (double m : {0.05, 0.25, 0.5, 1.0, 2.0}) {
      const ClassParams p(alpha, m);
      for (int k = 1; k <= 9; ++k) {
        const double r = 0.1 * k;
        CHECK(near(g1(p, r), g1_series(p, r), 1e-10));
        CHECK(near(g2(p, r), g2_series(p, r), 1e-10));
      }
    }
  }
}

TEST_CASE("both G functions increase strictly and G2 dominates G1") {
  for (const TableRow& row : kTable) {
    const ClassParams p(row.alpha, row.m);
    double prev1 = g1(p, 0.0), prev2 = g2(p, 0.0);
    for (int k = 1; k <= 19; ++k) {
      const double r = 0.05 * k;
      const double v1 = g1(p, r), v2 = g2(p, r);
      CHECK(v1 > prev1);
      CHECK(v2 > prev2);
      CHECK(v2 >= v1 - 1e-12);
      prev1 = v1;
      prev2 = v2;
    }
  }
}

TEST_CASE("solver reproduces the published radii") {
  for (const TableRow& row : kTable) {
    const ClassParams p(row.alpha, row.m);
    const RadiiResult res = solve_radii(p);
    CHECK(near(res.r_star, row.r_star, 5e-6));
    CHECK(near(res.r_c, row.r_c, 5e-6));
    CHECK(res.r_c <= res.r_star);
    CHECK(res.iterations <= 400);
  }
}

TEST_CASE("solver closed-form roots") {
  const RadiiResult res = solve_radii(ClassParams(1.0, 0.5));
  CHECK(near(res.r_star, 1.0 - 1.0 / std::exp(1.0), 1e-9));

  // alpha = 1/2 kills the 2F1 term of G2: r_c = c/(1+c), c = alpha/(2 kappa)
  CHECK(near(solve_radii(ClassParams(0.5, 0.25)).r_c, 0.25, 1e-9));
  CHECK(near(solve_radii(ClassParams(0.5, 2.0)).r_c, 1.0 / 11.0, 1e-9));

  // alpha = 1 reduction: G1 = -ln(1-r) - 1/(2M), root 1 - exp(-1/(2M))
  for (double m : {0.3, 0.8, 2.0}) {
    CHECK(near(solve_radii(ClassParams(1.0, m)).r_star,
               1.0 - std::exp(-0.5 / m), 1e-9));
  }
}

TEST_CASE("residual contract") {
  const double tol = 1e-10;
  for (const TableRow& row : kTable) {
    const ClassParams p(row.alpha, row.m);
    const RadiiResult res = solve_radii(p, tol);
    CHECK(std::abs(res.residual_star) <= tol);
    CHECK(std::abs(res.residual_c) <= tol);
    CHECK(std::abs(g1(p, res.r_star)) <= 10 * tol);
    CHECK(std::abs(g2(p, res.r_c)) <= 10 * tol);
  }
}

TEST_CASE("starlike/convex coefficient sums of the truncated extremal") {
  // At the solved radii the weighted sums S1, S2 of the degree-64 extremal
  // function sit at (just under) the value 1 that guarantees starlikeness
  // and convexity.
  for (const TableRow& row : kTable) {
    const ClassParams p(row.alpha, row.m);
    const RadiiResult res = solve_radii(p);
    const HarmonicSeries f = extremal_analytic(p, 64);
    double s1 = 0.0, s2 = 0.0;
    for (int n = 2; n <= 64; ++n) {
      const double coeff = std::abs(f.a(n)) + std::abs(f.b(n));
      s1 += n * coeff * std::pow(res.r_star, n - 1);
      s2 += n * n * coeff * std::pow(res.r_c, n - 1);
    }
    CHECK(s1 <= 1.0 + 1e-6);
    CHECK(s2 <= 1.0 + 1e-6);
  }
}

TEST_CASE("bracket failure for tiny kappa") {
  CHECK_THROWS_AS(solve_radii(ClassParams(1.0, 0.01)), BracketFailure);
}

TEST_CASE("solver tolerance validation") {
  CHECK_THROWS_AS(solve_radii(ClassParams(1.0, 0.5), 0.5),
                  ArgumentOutOfRange);
  CHECK_THROWS_AS(solve_radii(ClassParams(1.0, 0.5), 1e-14),
                  ArgumentOutOfRange);
}

TEST_CASE("curve sampling") {
  const ClassParams p(1.0, 0.5);
  const auto rows = curve(p, 0.0, 0.8, 5);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().r == 0.0);
  CHECK(rows.front().g1 == -1.0);
  CHECK(rows.front().g2 == -1.0);
  CHECK(rows.back().r == 0.8);

  // monotone columns; one sign change of g1 bracketing the root
  int flips = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].g1 > rows[i - 1].g1);
    CHECK(rows[i].g2 > rows[i - 1].g2);
    if (rows[i - 1].g1 < 0.0 && rows[i].g1 >= 0.0) {
      ++flips;
      const double r_star = solve_radii(p).r_star;
      CHECK(rows[i - 1].r < r_star);
      CHECK(r_star <= rows[i].r);
    }
  }
  CHECK(flips == 1);

  CHECK_THROWS_AS(curve(p, 0.5, 0.4, 5), ArgumentOutOfRange);
  CHECK_THROWS_AS(curve(p, 0.0, 0.8, 1), ArgumentOutOfRange);
  CHECK_THROWS_AS(curve(p, 0.0, 1.0, 5), ArgumentOutOfRange);
}
