// Decomposes a singular TNN matrix three ways and prints the Neville run.

#include <iostream>

#include "tnlu/tnlu.hpp"

int main() {
  using namespace tnlu;

  const Mat a{{0, 1, 2, 1}, {0, 2, 4, 2}, {0, 1, 2, 3}, {0, 3, 6, 11}};

  const auto cls = detect_class(a);
  if (!cls) {
    std::cerr << "matrix lies in no class\n";
    return 1;
  }
  std::cout << "class " << cls->to_string() << "\n";

  NevilleOptions options;
  options.record_stages = true;
  const NevilleResult run = neville_decompose(a, options);
  for (std::size_t k = 0; k < run.trace.moves.size(); ++k) {
    std::cout << "\n" << format_move(run.trace.moves[k]) << "\nL:\n"
              << format_matrix(run.trace.stages[k].L) << "U:\n" << format_matrix(run.trace.stages[k].U);
  }

  const bool agree = explicit_decompose(a, *cls) == run.lu && reconstruct_lu(a, *cls) == run.lu;
  std::cout << "\nexplicit, reconstruction and Neville agree: " << (agree ? "yes" : "no") << "\n";
  return agree ? 0 : 1;
}
