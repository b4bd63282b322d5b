// Runs the eleven acceptance criteria and prints one line per criterion.
// Exit code 0 when every criterion passes or fails only as a documented
// known deviation (see README), 1 otherwise.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "boxmin/repro.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  int passed = 0, known = 0, failed = 0;
  const auto results = boxmin::repro::run(ids, {}, [&](const boxmin::repro::CriterionResult& r) {
    std::cout << boxmin::repro::format_line(r) << std::endl;
    if (r.passed) ++passed;
    else if (r.known_deviation) ++known;
    else ++failed;
  });
  std::cout << passed << "/" << results.size() << " criteria passed";
  if (known) std::cout << ", " << known << " known deviation";
  std::cout << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
