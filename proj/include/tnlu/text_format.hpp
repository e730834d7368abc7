#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tnlu/error.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/scalar.hpp"

// Matrix text format:
//
//   m n
//   a11 a12 ... a1n
//   ...
//   am1 am2 ... amn
//
// Entries are integers or p/q with q > 0, separated by whitespace. Blank lines
// are ignored, so an m x 0 matrix is just its header line.

namespace tnlu {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

inline std::size_t parse_count(const std::string& token) {
  if (token.empty() || token.size() > 9 || token.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::parse, "bad matrix dimension '" + token + "'");
  return std::stoul(token);
}

}  // namespace detail

inline Mat parse_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto tokens = detail::split_tokens(line);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  if (lines.empty()) detail::fail(ErrorKind::parse, "empty matrix input");
  if (lines.front().size() != 2) detail::fail(ErrorKind::parse, "header must be 'm n'");
  const std::size_t m = detail::parse_count(lines.front()[0]);
  const std::size_t n = detail::parse_count(lines.front()[1]);
  const std::size_t expected_lines = n == 0 ? 0 : m;
  if (lines.size() - 1 != expected_lines)
    detail::fail(ErrorKind::parse, "expected " + std::to_string(expected_lines) + " rows, found " +
                                       std::to_string(lines.size() - 1));
  std::vector<Scalar> entries;
  entries.reserve(m * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != n)
      detail::fail(ErrorKind::parse, "row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                                         " entries, expected " + std::to_string(n));
    for (const auto& token : lines[i]) entries.push_back(parse_scalar(token));
  }
  return Mat(m, n, std::move(entries));
}

inline Mat parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

inline std::string format_matrix(const Mat& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) out += ' ';
      out += format_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace tnlu
