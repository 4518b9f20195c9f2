// Acceptance suite: runs every verification check and prints one pass/fail
// line per criterion. Exit status 0 iff everything passed.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sds/verify.hpp"

int main(int argc, char** argv) {
  sds::verify::Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") {
      opt.quick = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: sds_acceptance [--quick] [--seed N]\n";
      return 2;
    }
  }
  auto results = sds::verify::run_all(opt);
  sds::verify::print_report(std::cout, results);
  return sds::verify::all_passed(results) ? 0 : 1;
}
