#ifndef ISING_ACCEPTANCE_HPP
#define ISING_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace ising {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;                // what was checked, on success
  std::vector<std::string> failures;  // one entry per failed comparison
  double seconds = 0;
};

struct AcceptanceOptions {
  std::string fixture_dir;  // empty: the compiled-in default
};

constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// "criterion N: PASS|FAIL  title  (summary or first failures)"
std::string format_result(const CriterionResult& r);

}  // namespace ising

#endif
