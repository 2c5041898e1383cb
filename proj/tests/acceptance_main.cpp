// Prints one line per acceptance criterion; -v adds the detail lines.
#include <cstring>
#include <iostream>

#include "knotcert/acceptance.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  knotcert::AcceptanceConfig cfg;
  int failed = 0;
  for (const auto& r : knotcert::run_acceptance(cfg)) {
    std::cout << r.line() << "\n";
    if (verbose || !r.pass)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
