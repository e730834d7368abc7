#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tnlu/echelon.hpp"
#include "tnlu/error.hpp"
#include "tnlu/explicit_lu.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/mclass.hpp"
#include "tnlu/text_format.hpp"
#include "tnlu/tnn.hpp"

// Modified Neville elimination. Starting from (L, U) = (I, A) the loop
//   1. stops once U is in strictly upper echelon form,
//   2. otherwise deletes the zero row of U with the largest index together with
//      the matching column of L,
//   3. otherwise clears u(s+1, t) using row s, where t is the first column at
//      which U stops being in echelon form and s is the largest row with
//      u(s,t), u(s+1,t) both nonzero. L absorbs the inverse row operation.
// A = L U holds after every move, and for TNN input both factors stay TNN.

namespace tnlu {

enum class MoveKind { delete_row, eliminate };

/// One step of the algorithm. A deletion removes row `row` of U (and column
/// `row` of L). An elimination subtracts `multiplier` times row `row` from row
/// `row + 1` of U, clearing column `col`.
struct Move {
  MoveKind kind = MoveKind::delete_row;
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar multiplier;

  static Move deletion(std::size_t i) { return {MoveKind::delete_row, i, 0, Scalar(0)}; }
  static Move elimination(std::size_t s, std::size_t t, Scalar x) { return {MoveKind::eliminate, s, t, std::move(x)}; }
  friend bool operator==(const Move&, const Move&) = default;
};

struct Stage {
  Mat L;
  Mat U;
  friend bool operator==(const Stage&, const Stage&) = default;
};

struct NevilleTrace {
  std::vector<Move> moves;
  /// (L, U) after each move; filled only when stages are recorded.
  std::vector<Stage> stages;
};

struct NevilleResult {
  LUPair lu;
  NevilleTrace trace;
};

struct NevilleOptions {
  bool record_stages = false;
  /// Brute-force TNN check of the input when min(m,n) is within the guard.
  /// Larger inputs rely on the dynamic checks only.
  bool check_input = true;
  BruteForceGuard guard{};
  /// Re-check A = L U after every move.
#ifdef TNLU_VERIFY_INVARIANTS
  bool verify_invariants = true;
#else
  bool verify_invariants = false;
#endif
};

// ---------------------------------------------------------------------------
// Trace text form: one move per line, "D i" or "E s t p/q".

inline std::string format_move(const Move& move) {
  if (move.kind == MoveKind::delete_row) return "D " + std::to_string(move.row);
  return "E " + std::to_string(move.row) + " " + std::to_string(move.col) + " " + format_scalar(move.multiplier);
}

inline std::string format_trace(const NevilleTrace& trace) {
  std::string out;
  for (const auto& move : trace.moves) out += format_move(move) + "\n";
  return out;
}

inline NevilleTrace parse_trace(std::string_view text) {
  NevilleTrace trace;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    auto where = [&] { return "trace line " + std::to_string(line_no) + ": "; };
    auto index = [&](const std::string& token) {
      const std::size_t value = detail::parse_count(token);
      if (value == 0) detail::fail(ErrorKind::parse, where() + "indices are 1-based");
      return value;
    };
    if (tokens[0] == "D" && tokens.size() == 2) {
      trace.moves.push_back(Move::deletion(index(tokens[1])));
    } else if (tokens[0] == "E" && tokens.size() == 4) {
      trace.moves.push_back(Move::elimination(index(tokens[1]), index(tokens[2]), parse_scalar(tokens[3])));
    } else {
      detail::fail(ErrorKind::parse, where() + "expected 'D i' or 'E s t p/q', got '" + line + "'");
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------

/// One Neville elimination move: row s+1 becomes row s+1 - (u(s+1,t)/u(s,t)) row s.
/// Requires u(s,t) != 0, u(s+1,t) != 0, u(i,j) = 0 for i >= s and j < t, and
/// u(s+w,t) = 0 for w > 1.
inline Mat neville_move(const Mat& u, std::size_t s, std::size_t t) {
  auto violated = [&](const std::string& condition) {
    detail::fail(ErrorKind::invalid_argument, "neville_move(s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                                                  "): " + condition);
  };
  if (s < 1 || s + 1 > u.rows() || t < 1 || t > u.cols()) violated("indices out of range for " + u.shape());
  if (sgn(u(s, t)) == 0) violated("u(s,t) is zero");
  if (sgn(u(s + 1, t)) == 0) violated("u(s+1,t) is zero");
  for (std::size_t i = s; i <= u.rows(); ++i)
    for (std::size_t j = 1; j < t; ++j)
      if (sgn(u(i, j)) != 0) violated("u(" + std::to_string(i) + "," + std::to_string(j) + ") left of column t is nonzero");
  for (std::size_t i = s + 2; i <= u.rows(); ++i)
    if (sgn(u(i, t)) != 0) violated("u(" + std::to_string(i) + ",t) below row s+1 is nonzero");

  const Scalar x = u(s + 1, t) / u(s, t);
  Mat b = u;
  for (std::size_t j = 1; j <= u.cols(); ++j) b(s + 1, j) -= x * u(s, j);
  return b;
}

/// The Step-3 choice (s, t) for a U without zero rows that is not in upper
/// echelon form, or nullopt when no such pair exists (which cannot happen for
/// TNN input).
inline std::optional<std::pair<std::size_t, std::size_t>> find_elimination(const Mat& u) {
  if (u.rows() < 2) return std::nullopt;
  for (std::size_t t = 1; t <= u.cols(); ++t) {
    if (is_upper_echelon(submatrix(u, all_rows(u), IndexSet::range(1, t))).is_echelon) continue;
    for (std::size_t s = u.rows() - 1; s >= 1; --s)
      if (sgn(u(s, t)) != 0 && sgn(u(s + 1, t)) != 0) return std::make_pair(s, t);
    return std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

/// L <- L (I + x E(s+1,s)), i.e. column s of L gains x times column s+1.
inline void absorb_elimination(Mat& l, std::size_t s, const Scalar& x) {
  for (std::size_t i = 1; i <= l.rows(); ++i) l(i, s) += x * l(i, s + 1);
}

inline LUPair finish(Mat l, Mat u) {
  ClassDesc cls{is_lower_echelon(l).pivots, is_upper_echelon(u).pivots};
  return {std::move(l), std::move(u), std::move(cls)};
}

[[noreturn]] inline void not_tnn(const std::string& detail_text) {
  fail(ErrorKind::not_tnn, "input not totally nonnegative: " + detail_text);
}

}  // namespace detail

inline NevilleResult neville_decompose(const Mat& a, const NevilleOptions& options = {}) {
  if (options.check_input && !options.guard.override_guard &&
      std::min(a.rows(), a.cols()) <= options.guard.max_bruteforce) {
    const TnnReport report = is_tnn(a, options.guard);
    if (!report.holds)
      detail::not_tnn("minor [" + report.witness->rows.to_string() + "|" + report.witness->cols.to_string() +
                      "] = " + format_scalar(report.witness->value));
  }
  for (const auto& x : a.entries())
    if (sgn(x) < 0) detail::not_tnn("negative entry " + format_scalar(x));

  Mat l = Mat::identity(a.rows());
  Mat u = a;
  NevilleTrace trace;
  while (true) {
    if (is_upper_echelon(u).is_strict) break;

    std::optional<std::size_t> zero_row;
    for (std::size_t i = u.rows(); i >= 1 && !zero_row; --i)
      if (u.row_is_zero(i)) zero_row = i;

    if (zero_row) {
      u = delete_row(u, *zero_row);
      l = delete_col(l, *zero_row);
      trace.moves.push_back(Move::deletion(*zero_row));
    } else {
      std::size_t leftmost = 1;
      while (u.col_is_zero(leftmost)) ++leftmost;
      if (sgn(u(1, leftmost)) == 0)
        detail::not_tnn("leftmost nonzero column " + std::to_string(leftmost) + " has a zero uppermost entry");
      const auto pivot = find_elimination(u);
      if (!pivot) detail::not_tnn("no row pair to eliminate with");
      const auto [s, t] = *pivot;
      const Scalar x = u(s + 1, t) / u(s, t);
      if (sgn(x) <= 0) detail::not_tnn("negative elimination multiplier " + format_scalar(x));
      try {
        u = neville_move(u, s, t);
      } catch (const Error& e) {
        detail::not_tnn(e.what());
      }
      for (const auto& entry : u.row(s + 1))
        if (sgn(entry) < 0)
          detail::not_tnn("negative entry " + format_scalar(entry) + " in row " + std::to_string(s + 1) +
                          " after elimination");
      detail::absorb_elimination(l, s, x);
      trace.moves.push_back(Move::elimination(s, t, x));
    }

    if (options.verify_invariants && matmul(l, u) != a)
      detail::fail(ErrorKind::invalid_argument, "internal: A = LU broken after move " + std::to_string(trace.moves.size()));
    if (options.record_stages) trace.stages.push_back({l, u});
  }

  LUPair lu = detail::finish(std::move(l), std::move(u));
  if (!is_lower_echelon(lu.L).is_strict || !in_class_L(lu.L, lu.cls.r, true) || !in_class_U(lu.U, lu.cls.c))
    detail::not_tnn("final factors are not in echelon classes");
  return {std::move(lu), std::move(trace)};
}

/// Re-applies `trace` from (I, A). Any move that does not fit the current
/// state, a multiplier that differs from u(s+1,t)/u(s,t), or a trace that
/// stops before U is strictly echelon raises a trace_mismatch error.
inline LUPair replay(const Mat& a, const NevilleTrace& trace) {
  Mat l = Mat::identity(a.rows());
  Mat u = a;
  for (std::size_t step = 0; step < trace.moves.size(); ++step) {
    const Move& move = trace.moves[step];
    auto mismatch = [&](const std::string& why) {
      detail::fail(ErrorKind::trace_mismatch,
                   "replay step " + std::to_string(step + 1) + " (" + format_move(move) + "): " + why);
    };
    if (move.kind == MoveKind::delete_row) {
      if (move.row < 1 || move.row > u.rows()) mismatch("row out of range for " + u.shape());
      if (!u.row_is_zero(move.row)) mismatch("row is not zero");
      u = delete_row(u, move.row);
      l = delete_col(l, move.row);
    } else {
      try {
        Mat next = neville_move(u, move.row, move.col);
        if (u(move.row + 1, move.col) / u(move.row, move.col) != move.multiplier) mismatch("multiplier differs");
        u = std::move(next);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::trace_mismatch) throw;
        mismatch(e.what());
      }
      detail::absorb_elimination(l, move.row, move.multiplier);
    }
  }
  if (!is_upper_echelon(u).is_strict)
    detail::fail(ErrorKind::trace_mismatch, "replay: trace ends before U is in strictly upper echelon form");
  return detail::finish(std::move(l), std::move(u));
}

}  // namespace tnlu
