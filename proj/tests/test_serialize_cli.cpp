#include "ising/cli.hpp"
#include "ising/serialize.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace ising;

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(const JobSpec& j) {
  std::ostringstream o, e;
  int c = run_job(j, o, e);
  return {c, o.str(), e.str()};
}
}  // namespace

TEST_CASE("series JSON round trip") {
  std::mt19937 g(3);
  for (int i = 0; i < 10; ++i) {
    SeriesK s = testutil::rand_series(g, -2 + i % 3, 12);
    Json j = series_to_json(s, false);
    CHECK(j["var"] == "k");
    SeriesK back = series_from_json(Json::parse(dump(j)));
    CHECK(back.valuation() == s.valuation());
    CHECK(back.order() == s.order());
    CHECK(back.agrees_with(s));
  }
}

TEST_CASE("t output requires even k-support") {
  SeriesK even = SeriesK::from_coeffs(0, {1, 0, rat(1, 4), 0, rat(9, 64)}, 4);
  Json j = series_to_json(even, true);
  CHECK(j["var"] == "t");
  CHECK(j["coeffs"][1] == "1/4");
  SeriesK odd = SeriesK::from_coeffs(1, {1, 0, rat(1, 2)}, 3);
  CHECK_THROWS_AS(series_to_json(odd, true), SerializeError);
  CHECK_NOTHROW(series_to_json(odd, false));
  CHECK_THROWS(series_from_json(Json::parse(R"({"var":"k","valuation":0,"order":1,"coeffs":["x"]})")));
}

TEST_CASE("CSV output") {
  SeriesK s = SeriesK::from_coeffs(0, {1, 0, rat(-3, 8)}, 2);
  std::string csv = series_to_csv(s, true);
  CHECK(csv.rfind("power,num,den\n", 0) == 0);
  CHECK(csv.find("1,-3,8") != std::string::npos);
}

TEST_CASE("corr job prints the high-T row coefficients and is deterministic") {
  JobSpec j;
  j.M = 0;
  j.N = 2;
  j.high = true;
  j.order = 8;
  Run a = run(j), b = run(j);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  Json out = Json::parse(a.out);
  CHECK(out["series"]["valuation"] == 1);
  CHECK(out["series"]["coeffs"][0] == "1/8");
  CHECK(out["series"]["coeffs"][1] == "1/16");
  j.route = Route::All;
  Run all = run(j);
  CHECK(all.code == kExitOk);
  CHECK(Json::parse(all.out)["routes_agree"] == true);
}

TEST_CASE("usage errors exit 2") {
  JobSpec j;
  j.tilde = true;  // tilde at low T
  CHECK(run(j).code == kExitUsage);
  JobSpec o;
  o.order = 2;
  CHECK(run(o).code == kExitUsage);
  JobSpec z;
  z.N = 0;
  CHECK(run(z).code == kExitUsage);
  JobSpec c;
  c.command = Command::Okamoto;
  c.format = Format::Csv;
  CHECK(run(c).code == kExitUsage);
}

TEST_CASE("check jobs pass on correlations") {
  for (Command cmd : {Command::VerifyOde, Command::FitCosgrove, Command::Okamoto}) {
    JobSpec j;
    j.command = cmd;
    j.M = 1;
    j.N = 3;
    j.order = 16;
    Run r = run(j);
    INFO(r.err);
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["pass"] == true);
  }
}

TEST_CASE("boundary job: obstruction exits 1") {
  JobSpec j;
  j.command = Command::Boundary;
  j.n = "1/2,17/10,1/5,0";
  j.branch = "B1";
  j.free_values = {{3, "1"}};
  j.order = 6;
  Run r = run(j);
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.err.find("obstruction") != std::string::npos);
}
