#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "pham/coeff_csv.hpp"
#include "support.hpp"

using namespace pham;

TEST_CASE("header-only file is the identity") {
  std::istringstream in("n,a_re,a_im,b_re,b_im\n");
  const HarmonicSeries f = read_coeff_csv(in);
  CHECK(f.degree() == 1);
}

TEST_CASE("leading comments are skipped") {
  std::istringstream in(
      "# alpha=1 m=0.5\n"
      "# another note\n"
      "n,a_re,a_im,b_re,b_im\n"
      "2,0.1,0,0.25,-0.5\n");
  const HarmonicSeries f = read_coeff_csv(in);
  CHECK(f.degree() == 2);
  CHECK(f.a(2) == Complex(0.1));
  CHECK(f.b(2) == Complex(0.25, -0.5));
}

TEST_CASE("write/read round trip is exact") {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> a(7), b(7);
  for (auto& v : a) v = {g(rng), g(rng)};
  for (auto& v : b) v = {g(rng), g(rng)};
  const HarmonicSeries f(AnalyticSeries(a), b);

  std::ostringstream out;
  write_coeff_csv(out, f, std::vector<std::string>{"round trip"});
  std::istringstream in(out.str());
  const HarmonicSeries back = read_coeff_csv(in);

  REQUIRE(back.degree() == f.degree());
  for (int n = 2; n <= f.degree(); ++n) {
    CHECK(back.a(n) == f.a(n));  // %.17g round-trips binary64 exactly
    CHECK(back.b(n) == f.b(n));
  }
}

TEST_CASE("schema violations cite the offending line") {
  SUBCASE("wrong header") {
    std::istringstream in("n,a_re,a_im,b_re,b_im,extra\n");
    CHECK_THROWS_AS(read_coeff_csv(in), CsvFormatError);
    try {
      std::istringstream in2("n,a_re,a_im,b_re,b_im,extra\n");
      read_coeff_csv(in2);
    } catch (const CsvFormatError& e) {
      CHECK(e.line == 1);
    }
  }
  SUBCASE("missing header entirely") {
    std::istringstream in("");
    CHECK_THROWS_AS(read_coeff_csv(in), CsvFormatError);
  }
  SUBCASE("row n=1 not allowed") {
    std::istringstream in("n,a_re,a_im,b_re,b_im\n1,0,0,0,0\n");
    try {
      read_coeff_csv(in);
      FAIL("expected CsvFormatError");
    } catch (const CsvFormatError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("gap in n") {
    std::istringstream in("n,a_re,a_im,b_re,b_im\n2,0,0,0,0\n4,0,0,0,0\n");
    try {
      read_coeff_csv(in);
      FAIL("expected CsvFormatError");
    } catch (const CsvFormatError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("non-numeric field") {
    std::istringstream in("n,a_re,a_im,b_re,b_im\n2,0,zero,0,0\n");
    try {
      read_coeff_csv(in);
      FAIL("expected CsvFormatError");
    } catch (const CsvFormatError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("zero") != std::string::npos);
    }
  }
  SUBCASE("wrong field count") {
    std::istringstream in("n,a_re,a_im,b_re,b_im\n2,0,0,0\n");
    CHECK_THROWS_AS(read_coeff_csv(in), CsvFormatError);
  }
  SUBCASE("comment after header is a data error") {
    std::istringstream in("n,a_re,a_im,b_re,b_im\n# late comment\n");
    CHECK_THROWS_AS(read_coeff_csv(in), CsvFormatError);
  }
}

TEST_CASE("missing file reports its path") {
  try {
    read_coeff_file("/nonexistent/coeffs.csv");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/coeffs.csv") !=
          std::string::npos);
  }
}
