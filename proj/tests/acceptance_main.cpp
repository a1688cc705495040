#include "sumkit/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = sumkit::acceptance::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  bool all = true;
  for (int id = 1; id <= sumkit::acceptance::criterion_count(); ++id) {
    const auto r = sumkit::acceptance::run_criterion(id, seed);
    std::cout << sumkit::acceptance::format_line(r) << std::endl;
    all = all && r.pass();
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
