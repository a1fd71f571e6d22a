// Acceptance runner: one line per criterion, PASS or FAIL, followed by the
// failing checks. Exit status is nonzero when any selected criterion fails.
//
//   acceptance               all eight
//   acceptance --criterion 4 just one
//   acceptance --verbose     every check, informational ones included

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "orthoinv/selfcheck.hpp"

int main(int argc, char** argv) {
  std::vector<int> which;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--verbose")) {
      verbose = true;
    } else {
      std::cerr << "usage: acceptance [--criterion N]... [--verbose]\n";
      return 2;
    }
  }
  if (which.empty())
    for (int n = 1; n <= 8; ++n) which.push_back(n);

  int failed = 0;
  for (int n : which) {
    orthoinv::selfcheck::Criterion c;
    try {
      c = orthoinv::selfcheck::run_criterion(n);
    } catch (const std::exception& e) {
      std::cout << "criterion " << n << ": FAIL (threw: " << e.what() << ")\n";
      ++failed;
      continue;
    }
    std::size_t counted = 0, bad = 0, notes = 0;
    for (auto& k : c.checks) {
      if (k.informational) {
        notes += !k.passed;
        continue;
      }
      ++counted;
      bad += !k.passed;
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", c.seconds);
    std::cout << "criterion " << n << ": " << (c.passed() ? "PASS" : "FAIL") << " " << c.title << " ("
              << counted - bad << "/" << counted << " checks, " << secs << " s";
    if (notes) std::cout << ", " << notes << " recorded discrepancies";
    std::cout << ")\n";
    for (auto& k : c.checks) {
      if (!verbose && k.passed) continue;
      std::cout << "    " << (k.passed ? "ok  " : k.informational ? "note" : "FAIL") << " " << k.id << ": " << k.what;
      if (!k.detail.empty()) std::cout << " | " << k.detail;
      std::cout << "\n";
    }
    if (!c.passed()) ++failed;
  }
  return failed ? 1 : 0;
}
