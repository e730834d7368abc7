#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "tnlu/error.hpp"

namespace tnlu {

/// Exact rational. mpq_class keeps numerator/denominator in lowest terms with a
/// positive denominator after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string format_scalar(const Scalar& x) { return x.get_str(10); }

/// Parses an integer or "p/q" token with q > 0. Anything else is a parse error.
inline Scalar parse_scalar(std::string_view token) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = token;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    detail::fail(ErrorKind::parse, "not a rational number: '" + std::string(token) + "'");

  Scalar value;
  value.get_num() = Integer(std::string(num), 10);
  value.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (value.get_den() == 0) detail::fail(ErrorKind::parse, "zero denominator: '" + std::string(token) + "'");
  if (token.front() == '-') value.get_num() = -value.get_num();
  value.canonicalize();
  return value;
}

}  // namespace tnlu
