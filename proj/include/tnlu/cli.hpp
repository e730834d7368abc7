#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tnlu/error.hpp"
#include "tnlu/explicit_lu.hpp"
#include "tnlu/identities.hpp"
#include "tnlu/mclass.hpp"
#include "tnlu/neville.hpp"
#include "tnlu/text_format.hpp"
#include "tnlu/tnn.hpp"

// Batch front end shared by the `tnlu` executable and the tests.

namespace tnlu::cli {

enum class Command { decompose, detect, check_tnn, identities_selftest, generate };
enum class Method { automatic, explicit_minors, neville, reconstruct };
enum class Format { text, structured };

struct RunConfig {
  Command command = Command::decompose;
  /// Matrix file ("-" for stdin); ignored when `inline_matrix` is set.
  std::string input_path = "-";
  /// Matrix text with ';' allowed as a line separator, e.g. "2 2; 0 1; 1 1".
  std::optional<std::string> inline_matrix;
  Method method = Method::automatic;
  bool trace = false;
  Format format = Format::text;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<std::size_t> factors;
  std::size_t count = 100;
  std::size_t max_bruteforce = 8;
  bool unchecked = false;
};

inline const char* method_name(Method method) {
  switch (method) {
    case Method::automatic: return "auto";
    case Method::explicit_minors: return "explicit";
    case Method::neville: return "neville";
    case Method::reconstruct: return "reconstruct";
  }
  return "?";
}

inline const char* command_name(Command command) {
  switch (command) {
    case Command::decompose: return "decompose";
    case Command::detect: return "detect";
    case Command::check_tnn: return "check-tnn";
    case Command::identities_selftest: return "identities-selftest";
    case Command::generate: return "generate";
  }
  return "?";
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::not_in_class: return 3;
    case ErrorKind::not_tnn: return 4;
    case ErrorKind::size_guard: return 5;
    case ErrorKind::invalid_argument: return 6;
    case ErrorKind::trace_mismatch: return 6;
  }
  return 1;
}

using Json = nlohmann::ordered_json;

inline Json to_json(const Mat& a) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : a.row(i)) row.push_back(format_scalar(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const IndexSet& s) { return Json(s.values()); }

inline Json to_json(const std::optional<ClassDesc>& d) {
  if (!d) return nullptr;
  return Json{{"r", to_json(d->r)}, {"c", to_json(d->c)}};
}

/// Deterministic document text: two-space indentation, keys in insertion
/// order, exact rationals as "p" or "p/q" strings.
inline std::string emit_structured(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline Mat load_matrix(const RunConfig& config) {
  if (config.inline_matrix) {
    std::string text = *config.inline_matrix;
    for (char& ch : text)
      if (ch == ';') ch = '\n';
    return parse_matrix(text);
  }
  if (config.input_path == "-") return parse_matrix(std::cin);
  std::ifstream in(config.input_path);
  if (!in) tnlu::detail::fail(ErrorKind::parse, "cannot open '" + config.input_path + "'");
  return parse_matrix(in);
}

inline std::string class_text(const std::optional<ClassDesc>& d) {
  return d ? "r = " + d->r.to_string() + ", c = " + d->c.to_string() : std::string("none");
}

struct Decomposition {
  LUPair lu;
  std::optional<NevilleTrace> trace;
  std::optional<std::string> cross_check;
};

inline Decomposition decompose(const Mat& a, const RunConfig& config) {
  const BruteForceGuard guard{config.max_bruteforce, false};
  auto class_of = [&]() -> ClassDesc {
    const auto d = config.unchecked ? propose_class(a) : detect_class(a, guard);
    if (!d) tnlu::detail::fail(ErrorKind::not_in_class, "matrix lies in no class M_{r,c}");
    return *d;
  };
  // detect_class already confirmed membership; --unchecked skips it entirely.
  const DecomposeOptions after_detection{false, guard};

  NevilleOptions neville_options;
  neville_options.record_stages = config.trace;
  neville_options.check_input = !config.unchecked;
  neville_options.guard = guard;

  switch (config.method) {
    case Method::explicit_minors: return {explicit_decompose(a, class_of(), after_detection), {}, {}};
    case Method::reconstruct: return {reconstruct_lu(a, class_of(), after_detection), {}, {}};
    case Method::neville: {
      auto result = neville_decompose(a, neville_options);
      return {std::move(result.lu), std::move(result.trace), {}};
    }
    case Method::automatic: break;
  }

  Decomposition out{explicit_decompose(a, class_of(), after_detection), {}, {}};
  bool tnn = false;
  if (std::min(a.rows(), a.cols()) <= guard.max_bruteforce) tnn = is_tnn(a, guard).holds;
  if (tnn) {
    neville_options.check_input = false;  // just established
    auto result = neville_decompose(a, neville_options);
    if (!(result.lu == out.lu))
      throw std::logic_error("explicit and Neville decompositions disagree");
    out.trace = std::move(result.trace);
    out.cross_check = "neville";
  }
  return out;
}

inline Json trace_json(const NevilleTrace& trace) {
  Json moves = Json::array();
  for (std::size_t k = 0; k < trace.moves.size(); ++k) {
    Json move{{"move", format_move(trace.moves[k])}};
    if (k < trace.stages.size()) {
      move["L"] = to_json(trace.stages[k].L);
      move["U"] = to_json(trace.stages[k].U);
    }
    moves.push_back(std::move(move));
  }
  return moves;
}

inline void run_decompose(const RunConfig& config, std::ostream& out) {
  const Mat a = load_matrix(config);
  const Decomposition result = decompose(a, config);
  if (config.format == Format::structured) {
    Json doc{{"command", "decompose"},
             {"method", method_name(config.method)},
             {"class", to_json(std::optional<ClassDesc>(result.lu.cls))},
             {"L", to_json(result.lu.L)},
             {"U", to_json(result.lu.U)}};
    if (config.method == Method::automatic)
      doc["cross_check"] = result.cross_check ? Json(*result.cross_check) : Json(nullptr);
    if (config.trace) doc["trace"] = result.trace ? trace_json(*result.trace) : Json(nullptr);
    out << emit_structured(doc);
    return;
  }
  out << "method: " << method_name(config.method);
  if (config.method == Method::automatic)
    out << " (explicit" << (result.cross_check ? ", cross-checked by " + *result.cross_check : std::string()) << ")";
  out << "\nclass: " << class_text(result.lu.cls) << "\n";
  out << "L:\n" << format_matrix(result.lu.L) << "U:\n" << format_matrix(result.lu.U);
  if (config.trace) out << "trace:\n" << (result.trace ? format_trace(*result.trace) : std::string("unavailable\n"));
}

inline void run_detect(const RunConfig& config, std::ostream& out) {
  const Mat a = load_matrix(config);
  const auto d = detect_class(a, BruteForceGuard{config.max_bruteforce, false});
  if (config.format == Format::structured)
    out << emit_structured(Json{{"command", "detect"}, {"class", to_json(d)}});
  else
    out << "class: " << class_text(d) << "\n";
}

inline void run_check_tnn(const RunConfig& config, std::ostream& out) {
  const Mat a = load_matrix(config);
  const TnnReport report = is_tnn(a, BruteForceGuard{config.max_bruteforce, false});
  if (config.format == Format::structured) {
    Json witness = nullptr;
    if (report.witness)
      witness = Json{{"rows", to_json(report.witness->rows)},
                     {"cols", to_json(report.witness->cols)},
                     {"value", format_scalar(report.witness->value)}};
    out << emit_structured(Json{{"command", "check-tnn"}, {"tnn", report.holds}, {"witness", witness}});
    return;
  }
  out << "tnn: " << (report.holds ? "yes" : "no") << "\n";
  if (report.witness)
    out << "witness: [" << report.witness->rows.to_string() << "|" << report.witness->cols.to_string()
        << "] = " << format_scalar(report.witness->value) << "\n";
}

inline void run_generate(const RunConfig& config, std::ostream& out) {
  const std::size_t factors = config.factors.value_or(2 * (config.rows + config.cols));
  const Mat a = random_tnn(config.rows, config.cols, config.seed, factors);
  if (config.format == Format::structured) {
    out << emit_structured(Json{{"command", "generate"},
                                {"seed", config.seed},
                                {"rows", config.rows},
                                {"cols", config.cols},
                                {"factors", factors},
                                {"matrix", to_json(a)}});
    return;
  }
  out << format_matrix(a);
}

inline bool run_selftest(const RunConfig& config, std::ostream& out) {
  const SelftestReport report = identities_selftest(config.seed, config.count);
  if (config.format == Format::structured) {
    Json families = Json::array();
    for (const auto& f : report.families)
      families.push_back(Json{{"name", f.name}, {"passed", f.passed}, {"failed", f.failed}});
    out << emit_structured(Json{{"command", "identities-selftest"},
                                {"seed", config.seed},
                                {"count", config.count},
                                {"families", families},
                                {"ok", report.all_passed()}});
  } else {
    for (const auto& f : report.families)
      out << (f.failed == 0 ? "PASS " : "FAIL ") << f.name << ": " << f.passed << " passed, " << f.failed
          << " failed\n";
  }
  return report.all_passed();
}

inline void report_error(const RunConfig& config, std::string_view category, const std::string& message,
                         std::ostream& out, std::ostream& err) {
  if (config.format == Format::structured)
    out << emit_structured(Json{{"error", {{"category", category}, {"message", message}}}});
  else
    err << "error: " << category << ": " << message << "\n";
}

}  // namespace detail

/// Executes one command. Returns the process exit status: 0 on success,
/// otherwise exit_code() of the error category (1 for internal failures).
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::decompose: detail::run_decompose(config, out); break;
      case Command::detect: detail::run_detect(config, out); break;
      case Command::check_tnn: detail::run_check_tnn(config, out); break;
      case Command::generate: detail::run_generate(config, out); break;
      case Command::identities_selftest: return detail::run_selftest(config, out) ? 0 : 1;
    }
    return 0;
  } catch (const Error& e) {
    detail::report_error(config, to_string(e.kind()), e.what(), out, err);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    detail::report_error(config, "internal", e.what(), out, err);
    return 1;
  }
}

}  // namespace tnlu::cli
