#include "pham/coeff_csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace pham {

namespace {

constexpr const char* kHeader = "n,a_re,a_im,b_re,b_im";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& field, int line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw CsvFormatError(line_no, "not a decimal number: '" + field + "'");
  }
  return value;
}

long parse_index(const std::string& field, int line_no) {
  long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw CsvFormatError(line_no, "not an integer index: '" + field + "'");
  }
  return value;
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

HarmonicSeries read_coeff_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;

  std::vector<Complex> a_tail, b_tail;
  long expected_n = 2;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (!header_seen) {
      if (!line.empty() && line.front() == '#') continue;  // leading comments
      if (line != kHeader) {
        throw CsvFormatError(line_no, "expected header '" +
                                          std::string(kHeader) + "', got '" +
                                          line + "'");
      }
      header_seen = true;
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() != 5) {
      throw CsvFormatError(line_no, "expected 5 comma-separated fields, got " +
                                        std::to_string(fields.size()));
    }
    const long n = parse_index(fields[0], line_no);
    if (n != expected_n) {
      throw CsvFormatError(line_no, "expected row n=" +
                                        std::to_string(expected_n) + ", got n=" +
                                        std::to_string(n));
    }
    if (n > kMaxDegree) {
      throw CsvFormatError(line_no, "degree exceeds " +
                                        std::to_string(kMaxDegree));
    }
    a_tail.emplace_back(parse_double(fields[1], line_no),
                        parse_double(fields[2], line_no));
    b_tail.emplace_back(parse_double(fields[3], line_no),
                        parse_double(fields[4], line_no));
    ++expected_n;
  }

  if (!header_seen) {
    throw CsvFormatError(line_no + 1, "missing header '" +
                                          std::string(kHeader) + "'");
  }
  return HarmonicSeries(AnalyticSeries(std::move(a_tail)), std::move(b_tail));
}

HarmonicSeries read_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open coefficient file: " + path);
  }
  try {
    return read_coeff_csv(in);
  } catch (const CsvFormatError& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_coeff_csv(std::ostream& out, const HarmonicSeries& f,
                     std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << kHeader << "\n";
  const auto a = f.analytic_part().tail();
  const auto b = f.co_tail();
  for (std::size_t k = 0; k < a.size(); ++k) {
    out << (k + 2) << ',' << format17(a[k].real()) << ','
        << format17(a[k].imag()) << ',' << format17(b[k].real()) << ','
        << format17(b[k].imag()) << "\n";
  }
}

}  // namespace pham
