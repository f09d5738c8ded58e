// Acceptance battery: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion]   (no argument runs all eight)

#include <iostream>
#include <optional>
#include <string>

#include "seveninv/acceptance.hpp"
#include "seveninv/search.hpp"

int main(int argc, char** argv) {
  std::optional<int> only;
  if (argc > 1) {
    try {
      only = std::stoi(argv[1]);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [1-" << seveninv::acceptance::kCriteria << "]\n";
      return 2;
    }
    if (*only < 1 || *only > seveninv::acceptance::kCriteria) {
      std::cerr << "criterion out of range\n";
      return 2;
    }
  }
  return seveninv::acceptance::run_battery(std::cout, only, seveninv::default_threads());
}
