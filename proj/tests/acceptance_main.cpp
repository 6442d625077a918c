#include "ising/acceptance.hpp"

#include <iostream>

int main(int argc, char** argv) {
  ising::AcceptanceOptions opt;
  if (argc > 1) opt.fixture_dir = argv[1];
  bool all = true;
  for (int id = 1; id <= ising::kCriteria; ++id) {
    ising::CriterionResult r = ising::run_criterion(id, opt);
    std::cout << ising::format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
