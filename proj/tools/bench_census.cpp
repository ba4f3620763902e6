// Benchmark for the census scan: serial reference path against the OpenMP
// path on the same parameters, with a byte-equality check of the reports.
//
//   zqsep-bench [q] [n] [budget]        (defaults: 2 7)

#include <cstdint>
#include <iostream>
#include <string>

#include "zqsep/census.hpp"
#include "zqsep/json_io.hpp"

int main(int argc, char** argv) {
  int q = 2, n = 7;
  std::uint64_t budget = 100'000'000;
  try {
    if (argc >= 3) {
      q = std::stoi(argv[1]);
      n = std::stoi(argv[2]);
    }
    if (argc >= 4) budget = std::stoull(argv[3]);

    zqsep::CensusOptions serial;
    serial.parallel = false;
    serial.budget = budget;
    zqsep::CensusOptions parallel;
    parallel.parallel = true;
    parallel.budget = budget;

    const auto a = zqsep::find_critical(q, n, serial);
    const auto b = zqsep::find_critical(q, n, parallel);

    std::cout << "census critical q=" << q << " n=" << n << "\n"
              << "  classes " << a.classes_scanned << ", critical "
              << a.critical_classes.size() << "\n"
              << "  serial   " << a.wall_ms << " ms\n"
              << "  parallel " << b.wall_ms << " ms";
    if (b.wall_ms > 0) std::cout << "  (speedup x" << a.wall_ms / b.wall_ms << ")";
    std::cout << "\n";

    const std::string ja = zqsep::canonical_dump(zqsep::to_json(a));
    const std::string jb = zqsep::canonical_dump(zqsep::to_json(b));
    if (ja != jb) {
      std::cerr << "FAIL: serial and parallel reports differ\n";
      return 1;
    }
    std::cout << "  reports byte-identical\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
