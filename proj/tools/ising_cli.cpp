#include "ising/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace ising;
  CLI::App app{"Exact series for the nu = -k Ising correlations and their sigma-form equations"};
  app.require_subcommand(1);
  app.fallthrough();

  JobSpec job;
  job.order = 20;
  std::string regime = "low", route = "fw", format = "json", var = "t", branch, n;
  std::vector<std::string> free;

  app.add_option("--M", job.M, "row separation M")->check(CLI::NonNegativeNumber);
  app.add_option("--N", job.N, "column separation N")->check(CLI::NonNegativeNumber);
  app.add_option("--regime", regime, "low or high temperature")->check(CLI::IsMember({"low", "high"}));
  app.add_flag("--tilde", job.tilde, "tilde correlation (high T, M+N odd)");
  app.add_option("--order", job.order, "series order (k for corr/factor, t for the checks); at least 4")
      ->envname(kOrderEnv)
      ->check(CLI::Range(4, 100000));
  app.add_option("--route", route, "row, fw, recursion, or all (cross-checked)")
      ->check(CLI::IsMember({"row", "fw", "recursion", "all"}));
  app.add_option("--output", job.output, "write the artifact here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--var", var, "series variable of the output: t or k")->check(CLI::IsMember({"t", "k"}));
  app.add_option("--fixture-dir", job.fixture_dir, "closed-form fixture corpus (selftest)");

  const std::map<std::string, Command> commands = {
      {"corr", Command::Corr},           {"verify-ode", Command::VerifyOde},
      {"fit-cosgrove", Command::FitCosgrove}, {"okamoto", Command::Okamoto},
      {"boundary", Command::Boundary},   {"factor", Command::Factor},
      {"identities", Command::Identities}, {"selftest", Command::Selftest}};
  const std::map<std::string, std::string> help = {
      {"corr", "correlation series by one route or all routes"},
      {"verify-ode", "residual of the sigma-form equation"},
      {"fit-cosgrove", "fit the six Cosgrove parameters and reduce to Okamoto form"},
      {"okamoto", "Okamoto residual of h and the fitted parameters"},
      {"boundary", "analytic-at-0 branch solution with resonance constants"},
      {"factor", "Wilf factorization of a symmetric Toeplitz D_N (and the C(0,5) factors)"},
      {"identities", "hypergeometric and elliptic identity suite"},
      {"selftest", "full acceptance suite"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd] : commands) subs[name] = app.add_subcommand(name, help.at(name));
  CLI::App* b = subs["boundary"];
  b->add_option("--branch", branch, "B1..B4 (default: the correlation's branch)")
      ->check(CLI::IsMember({"B1", "B2", "B3", "B4"}));
  b->add_option("--n", n, "Okamoto parameters n1,n2,n3,n4 (default: from M, N, regime)");
  b->add_option("--free", free, "resonance constant order=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) job.command = commands.at(name);
  job.high = regime == "high";
  job.route = route == "row" ? Route::Row : route == "recursion" ? Route::Recursion : route == "all" ? Route::All : Route::Fw;
  job.format = format == "csv" ? Format::Csv : Format::Json;
  job.in_t = var == "t";
  if (!branch.empty()) job.branch = branch;
  if (!n.empty()) job.n = n;
  for (const auto& f : free) {
    auto eq = f.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --free expects order=value\n";
      return kExitUsage;
    }
    try {
      job.free_values[std::stoi(f.substr(0, eq))] = f.substr(eq + 1);
    } catch (const std::exception&) {
      std::cerr << "error: bad --free order in '" << f << "'\n";
      return kExitUsage;
    }
  }
  return run_job(job, std::cout, std::cerr);
}
