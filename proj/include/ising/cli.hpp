#ifndef ISING_CLI_HPP
#define ISING_CLI_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace ising {

enum class Command { Corr, VerifyOde, FitCosgrove, Okamoto, Boundary, Factor, Identities, Selftest };
enum class Route { Row, Fw, Recursion, All };
enum class Format { Json, Csv };

struct JobSpec {
  Command command = Command::Corr;
  int M = 0;
  int N = 1;
  bool high = false;
  bool tilde = false;
  int order = 20;
  Route route = Route::Fw;
  std::string output;  // empty: stdout
  Format format = Format::Json;
  std::string fixture_dir;
  bool in_t = true;  // series variable for corr/boundary output
  // boundary only
  std::optional<std::string> branch;       // B1..B4; default from the correlation
  std::optional<std::string> n;            // "n1,n2,n3,n4"; default from (M,N,regime)
  std::map<int, std::string> free_values;  // resonance order -> value
};

// exit codes: 0 all requested checks pass, 1 a check failed, 2 invalid job or I/O error
constexpr int kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2;

// environment variable holding the default --order
constexpr const char* kOrderEnv = "ISING_ORDER";

// runs one job; the artifact goes to job.output (or `out`), messages to `err`
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace ising

#endif
