#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsup {

inline bool near(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs a shell command, capturing stdout (stderr folded in).
inline RunResult run_command(const std::string& cmd) {
  RunResult res{-1, {}};
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    res.output.append(buf, n);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// Splits text into lines, dropping '#' comment lines.
inline std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.front() != '#') out.push_back(line);
    start = end + 1;
  }
  return out;
}

inline std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    const std::string field =
        (pos == std::string::npos) ? line.substr(start)
                                   : line.substr(start, pos - start);
    out.push_back(std::strtod(field.c_str(), nullptr));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// Minimal well-formedness scan for the emitted SVG: every opened tag must be
// closed in order; self-closing and declaration/comment tags are skipped.
inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    std::size_t close = text.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?' || tag.front() == '!') continue;
    if (tag.front() == '/') {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;  // self-closing
    const std::size_t name_end = tag.find_first_of(" \t\n");
    stack.push_back(tag.substr(0, name_end));
  }
  return stack.empty();
}

}  // namespace testsup
