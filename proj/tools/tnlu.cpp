// tnlu: exact LU decomposition of totally nonnegative matrices.
//
//   tnlu decompose [FILE] [--method auto|explicit|neville|reconstruct] [--trace]
//   tnlu detect [FILE]
//   tnlu check-tnn [FILE]
//   tnlu generate --size M N --seed S [--factors K]
//   tnlu identities-selftest [--seed S] [--count N]
//
// FILE defaults to stdin; --matrix "2 2; 0 1; 1 1" passes a matrix inline.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <vector>

#include "tnlu/cli.hpp"

int main(int argc, char** argv) {
  using namespace tnlu::cli;

  CLI::App app{"Exact LU decomposition of totally nonnegative matrices"};
  app.require_subcommand(1);

  RunConfig config;
  std::string inline_matrix;
  std::vector<std::size_t> size;

  const std::map<std::string, Method> methods{{"auto", Method::automatic},
                                              {"explicit", Method::explicit_minors},
                                              {"neville", Method::neville},
                                              {"reconstruct", Method::reconstruct}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"structured", Format::structured}};

  auto add_common = [&](CLI::App* sub, bool takes_matrix) {
    sub->add_option("--format", config.format, "text or structured")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    if (!takes_matrix) return;
    sub->add_option("input", config.input_path, "matrix file ('-' for stdin)");
    sub->add_option("--matrix", inline_matrix, "inline matrix, rows separated by ';'");
    sub->add_option("--max-bruteforce", config.max_bruteforce, "largest min(m,n) for exhaustive minor checks")
        ->check(CLI::PositiveNumber);
  };

  auto* decompose = app.add_subcommand("decompose", "LU factors, class and optional Neville trace");
  add_common(decompose, true);
  decompose->add_option("--method", config.method, "auto, explicit, neville or reconstruct")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  decompose->add_flag("--trace", config.trace, "include the Neville trace (neville and auto methods)");
  decompose->add_flag("--unchecked", config.unchecked, "skip class / TNN verification of the input");

  auto* detect = app.add_subcommand("detect", "class M_{r,c} of a matrix, or none");
  add_common(detect, true);

  auto* check_tnn = app.add_subcommand("check-tnn", "brute-force total nonnegativity test");
  add_common(check_tnn, true);

  auto* generate = app.add_subcommand("generate", "seeded random totally nonnegative matrix");
  add_common(generate, false);
  generate->add_option("--size", size, "rows and columns")->expected(2)->required();
  generate->add_option("--seed", config.seed, "generator seed")->required();
  generate->add_option("--factors", config.factors, "number of elementary factors (default 2(m+n))");

  auto* selftest = app.add_subcommand("identities-selftest", "seeded random checks of the determinantal identities");
  add_common(selftest, false);
  selftest->add_option("--seed", config.seed, "base seed");
  selftest->add_option("--count", config.count, "instances per identity family");

  // "tnlu identities selftest" spelling.
  auto* identities = app.add_subcommand("identities", "identity tools");
  auto* nested_selftest = identities->add_subcommand("selftest", "same as identities-selftest");
  add_common(nested_selftest, false);
  nested_selftest->add_option("--seed", config.seed, "base seed");
  nested_selftest->add_option("--count", config.count, "instances per identity family");
  identities->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) config.command = Command::decompose;
  if (detect->parsed()) config.command = Command::detect;
  if (check_tnn->parsed()) config.command = Command::check_tnn;
  if (generate->parsed()) config.command = Command::generate;
  if (selftest->parsed() || nested_selftest->parsed()) config.command = Command::identities_selftest;
  if (!inline_matrix.empty()) config.inline_matrix = inline_matrix;
  if (size.size() == 2) {
    config.rows = size[0];
    config.cols = size[1];
  }

  return run(config, std::cout, std::cerr);
}
