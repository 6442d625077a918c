#include "ising/cli.hpp"

#include "ising/acceptance.hpp"
#include "ising/boundary.hpp"
#include "ising/cosgrove.hpp"
#include "ising/determinant.hpp"
#include "ising/elliptic_poly.hpp"
#include "ising/identities.hpp"
#include "ising/matrix_elements.hpp"
#include "ising/recursion.hpp"
#include "ising/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ising {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Regime regime_of(const JobSpec& j) { return j.high ? Regime::HighT : Regime::LowT; }

std::string mn(const JobSpec& j) { return "(" + std::to_string(j.M) + "," + std::to_string(j.N) + ")"; }

void validate(const JobSpec& j) {
  if (j.order < 4) throw UsageError("--order must be at least 4");
  if (j.M < 0 || j.N < 0) throw UsageError("--M and --N must be non-negative");
  if (j.command == Command::Identities || j.command == Command::Selftest) return;
  if (j.M == 0 && j.N == 0) throw UsageError("C(0,0) = 1; nothing to compute");
  if (j.tilde && !j.high) throw UsageError("--tilde applies to --regime high only");
  if (j.tilde && (j.M + j.N) % 2 == 0) throw UsageError("--tilde needs M+N odd");
  if (j.format == Format::Csv && j.command != Command::Corr && j.command != Command::Boundary)
    throw UsageError("--format csv is available for corr and boundary only");
}

// every family-level command works on M <= N and the FW route
Correlation family_corr(const JobSpec& j, int torder) {
  if (j.M > j.N) throw UsageError("this command covers M <= N");
  if (j.high && (j.M + j.N) % 2 == 1 && !j.tilde)
    throw UsageError("high-T C" + mn(j) + " vanishes identically; use --tilde");
  return corr_fw(j.M, j.N, regime_of(j), 2 * torder + 2 * j.N + 8, j.tilde);
}

void emit(const JobSpec& j, const std::string& text, std::ostream& out) {
  if (j.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(j.output, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + j.output + " for writing");
  f << text;
  if (!f) throw std::ios_base::failure("write to " + j.output + " failed");
}

Json rat_json(const Rational& r) { return to_string(r); }

int finish(const JobSpec& j, const Json& doc, bool pass, std::ostream& out) {
  emit(j, dump(doc), out);
  return pass ? kExitOk : kExitCheckFailed;
}

// ---- corr
struct RouteResult {
  std::string name;
  SeriesK series;
  std::optional<SeriesK> imag;
};

std::vector<RouteResult> corr_routes(const JobSpec& j) {
  Regime rg = regime_of(j);
  std::vector<RouteResult> out;
  auto want = [&](Route r) { return j.route == r || j.route == Route::All; };
  bool any = false;
  if (want(Route::Row)) {
    if (j.tilde) {
      if (j.route == Route::Row) throw UsageError("the row route has no tilde form");
    } else if (j.M == 0) {
      out.push_back({"row", corr_row(j.N, rg, j.order).series, {}});
    } else if (j.M == j.N) {
      out.push_back({"diag", corr_diag(j.N, rg, j.order).series, {}});
    } else if (j.route == Route::Row) {
      throw UsageError("the row route covers M = 0 (row) and M = N (diagonal)");
    }
    any = true;
  }
  if (want(Route::Fw)) {
    if (j.M <= j.N)
      out.push_back({"fw", corr_fw(j.M, j.N, rg, j.order, j.tilde).series, {}});
    else if (j.route == Route::Fw)
      throw UsageError("the FW route covers M <= N; use --route recursion");
    any = true;
  }
  if (want(Route::Recursion)) {
    if (j.tilde) {
      if (j.route == Route::Recursion) throw UsageError("the recursion route has no tilde form");
    } else {
      RecursionResult t = corr_recursion_table(j.M, j.N, j.order);
      if (!t.all_residuals_vanish()) throw std::runtime_error("recursion relations leave nonzero residuals");
      const TableEntry& e = (j.high ? t.high : t.low).at(j.M, j.N);
      if (!e.known) throw std::runtime_error("recursion did not reach C" + mn(j));
      RouteResult r{"recursion", e.value.re, {}};
      if (!e.value.im.is_zero()) r.imag = e.value.im;
      out.push_back(r);
    }
    any = true;
  }
  if (!any || out.empty()) throw UsageError("no route applies to C" + mn(j));
  return out;
}

int cmd_corr(const JobSpec& j, std::ostream& out, std::ostream& err) {
  auto routes = corr_routes(j);
  bool agree = true;
  for (size_t i = 1; i < routes.size(); ++i) {
    bool same = equal_through(routes[i].series, routes[0].series, j.order) &&
                routes[i].imag.has_value() == routes[0].imag.has_value();
    if (!same) {
      agree = false;
      err << "route " << routes[i].name << " differs from " << routes[0].name << "\n";
    }
  }
  const RouteResult& main = routes.front();
  if (main.imag && !main.series.is_zero())
    throw UsageError("C" + mn(j) + " is complex here; only purely real or purely imaginary entries are emitted");
  const SeriesK& s = main.imag ? *main.imag : main.series;
  if (j.format == Format::Csv) {
    emit(j, series_to_csv(s, j.in_t), out);
    return agree ? kExitOk : kExitCheckFailed;
  }
  Correlation c;
  c.M = j.M;
  c.N = j.N;
  c.regime = regime_of(j);
  c.tilde = j.tilde;
  c.series = s;
  c.route = main.name;
  Json doc = correlation_to_json(c, j.in_t);
  if (main.imag) doc["factor"] = "i";
  if (routes.size() > 1) {
    Json names = Json::array();
    for (const auto& r : routes) names.push_back(r.name);
    doc["routes_compared"] = names;
    doc["routes_agree"] = agree;
  }
  return finish(j, doc, agree, out);
}

// ---- verify-ode
int cmd_verify_ode(const JobSpec& j, std::ostream& out) {
  Correlation c = family_corr(j, j.order);
  SigmaSeries s = sigma_from_corr(c);
  OdeSpec spec = ode_for(s);
  ResidualCheck rc = check_residual(ode_residual(s, spec));
  bool pass = rc.vanishes && rc.order_verified >= j.order;
  Json doc = report_to_json(to_string(spec.family), j.M, j.N, rc);
  doc["regime"] = to_string(c.regime);
  doc["tilde"] = c.tilde;
  doc["sigma_variant"] = to_string(s.variant);
  doc["order_requested"] = j.order;
  doc["pass"] = pass;
  return finish(j, doc, pass, out);
}

Json params_json(const CosgroveParams& p) {
  Json o;
  const char* names[] = {"c5", "c6", "c7", "c8", "c9", "c10"};
  auto a = p.as_array();
  for (size_t i = 0; i < 6; ++i) o[names[i]] = rat_json(a[i]);
  return o;
}

OkamotoN family_n(const JobSpec& j) {
  if (!j.high) return okamoto_low(j.M, j.N);
  return (j.M + j.N) % 2 == 0 ? okamoto_high_even(j.M, j.N) : okamoto_high_odd(j.M, j.N);
}

// ---- fit-cosgrove
int cmd_fit(const JobSpec& j, std::ostream& out) {
  Correlation c = family_corr(j, j.order + 2);
  SigmaSeries s = sigma_from_corr(c);
  CosgroveParams expected = cosgrove_params_for(ode_for(s));
  CosgroveFit fit = cosgrove_fit(s.series, j.order);
  Json doc;
  doc["M"] = j.M;
  doc["N"] = j.N;
  doc["regime"] = to_string(c.regime);
  doc["tilde"] = c.tilde;
  doc["family"] = to_string(ode_for(s).family);
  doc["equations"] = fit.equations;
  doc["rank"] = fit.rank;
  doc["solution_dim"] = fit.solution_dim;
  doc["surplus"] = fit.surplus;
  doc["consistent"] = fit.consistent;
  if (!fit.diagnostic.empty()) doc["diagnostic"] = fit.diagnostic;
  doc["expected"] = params_json(expected);
  bool pass = fit.unique() && fit.surplus >= 6 && *fit.params == expected;
  if (fit.params) {
    doc["params"] = params_json(*fit.params);
    doc["matches_family"] = *fit.params == expected;
    OkamotoReduction red = cosgrove_to_okamoto(*fit.params);
    Json o;
    o["A"] = rat_json(red.A);
    o["B"] = rat_json(red.B);
    if (red.ok()) {
      bool n_ok = red.candidates.front().n == okamoto_canonical(family_n(j));
      o["n"] = okamoto_to_json(red.candidates.front().n);
      o["matches_family"] = n_ok;
      pass = pass && n_ok;
    } else {
      o["diagnostic"] = red.diagnostic;
      pass = false;
    }
    doc["okamoto"] = o;
  }
  doc["pass"] = pass;
  return finish(j, doc, pass, out);
}

// ---- okamoto
int cmd_okamoto(const JobSpec& j, std::ostream& out) {
  Correlation c = family_corr(j, j.order + 2);
  HData hd = h_from_corr(c);
  ResidualCheck rc = check_residual(okamoto_residual(hd.h, hd.n));
  SigmaSeries s = sigma_from_corr(c);
  CosgroveFit fit = cosgrove_fit(s.series, j.order);
  Json doc = report_to_json("okamoto", j.M, j.N, rc);
  doc["regime"] = to_string(c.regime);
  doc["tilde"] = c.tilde;
  doc["n"] = okamoto_to_json(hd.n);
  doc["canonical"] = okamoto_to_json(okamoto_canonical(hd.n));
  doc["shift_t"] = rat_json(hd.shift_t);
  doc["shift_c"] = rat_json(hd.shift_c);
  bool pass = rc.vanishes && rc.order_verified >= j.order;
  bool reduced = false;
  if (fit.unique()) {
    OkamotoReduction red = cosgrove_to_okamoto(*fit.params);
    if (red.ok()) {
      doc["n_from_fit"] = okamoto_to_json(red.candidates.front().n);
      reduced = red.candidates.front().n == okamoto_canonical(hd.n);
    }
  }
  doc["fit_agrees"] = reduced;
  pass = pass && reduced;
  doc["pass"] = pass;
  return finish(j, doc, pass, out);
}

// ---- boundary
OkamotoN parse_n(const std::string& s) {
  OkamotoN n;
  std::stringstream ss(s);
  std::string item;
  size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 4) throw UsageError("--n takes four comma-separated rationals");
    n[i++] = parse_rational(item);
  }
  if (i != 4) throw UsageError("--n takes four comma-separated rationals");
  return n;
}

int cmd_boundary(const JobSpec& j, std::ostream& out) {
  std::optional<Correlation> corr;
  OkamotoN n;
  if (j.n) {
    n = parse_n(*j.n);
  } else {
    corr = family_corr(j, j.order + 2);
    n = h_from_corr(*corr).n;
  }
  Branch b = j.branch ? parse_branch(*j.branch) : (corr ? natural_branch(*corr) : Branch::B1);
  // scheduled constants: user values, else the correlation's own, else 0
  std::map<int, Rational> schedule;
  std::optional<SeriesK> h;
  if (corr) h = h_from_corr(*corr).h;
  for (int k = 1; k <= j.order; ++k) schedule[k] = h ? h->coeff_t(k) : Rational(0);
  for (const auto& [k, v] : j.free_values) schedule[k] = parse_rational(v);
  BranchSolution sol = solve_analytic(n, b, schedule, j.order);
  if (j.format == Format::Csv) {
    emit(j, series_to_csv(sol.series(), true), out);
    return kExitOk;
  }
  Json doc = branch_to_json(sol);
  doc["order"] = sol.order;
  bool pass = true;
  if (corr) {
    Json m;
    try {
      LambdaMatch lm = match_lambda(*corr, sol);
      m["resonance_order"] = lm.resonance_order;
      m["free_constant"] = rat_json(lm.free_constant);
      m["free_constant_lambda_zero"] = rat_json(lm.free_constant_zero);
      m["bracket_coefficient"] = rat_json(lm.bracket_coefficient);
      m["matched"] = true;
    } catch (const BoundaryError& e) {
      m["matched"] = false;
      m["diagnostic"] = e.what();
      pass = false;
    }
    doc["match"] = m;
  }
  return finish(j, doc, pass, out);
}

// ---- factor
struct WilfRun {
  SeriesK plus, minus, det;
};

WilfRun wilf_run(int M, int N, int order) {
  for (int w = order + 2 * N; w <= 4 * order + 64; w += order) {
    SeriesMatrix m = SeriesMatrix::toeplitz(N, [&](int idx) { return fw_low_element(M, N, idx, w); });
    auto [p, q] = wilf_factor(m);
    WilfRun r{p, q, det_series(m)};
    if (r.det.order() >= order && (p * q).order() >= order) return r;
  }
  throw std::runtime_error("Wilf factors did not reach the requested order");
}

int cmd_factor(const JobSpec& j, std::ostream& out) {
  if (j.high) throw UsageError("factor covers the low-T symmetric Toeplitz case");
  if ((j.M + j.N) % 2 == 0 || j.M > j.N || j.N < 2)
    throw UsageError("factor needs M < N, M+N odd and N >= 2 (symmetric Toeplitz D_N)");
  WilfRun w = wilf_run(j.M, j.N, j.order);
  bool product_ok = equal_through(w.plus * w.minus, w.det, j.order);
  bool det_ok = equal_through(w.det, fw_determinant(j.M, j.N, Regime::LowT, j.order), j.order);
  Json doc;
  doc["M"] = j.M;
  doc["N"] = j.N;
  doc["det_plus"] = series_to_json(w.plus.truncate(j.order), false);
  doc["det_minus"] = series_to_json(w.minus.truncate(j.order), false);
  doc["product_equals_det"] = product_ok;
  doc["det_equals_fw"] = det_ok;
  bool pass = product_ok && det_ok;
  if (j.M == 0 && j.N == 5) {
    std::vector<EllipticPoly> f = c05_factors();
    EllipticPoly prod = c05_product();
    bool prod_ok = equal_through(elliptic_poly_eval(prod, j.order), corr_row(5, Regime::LowT, j.order).series, j.order);
    Json ff = Json::array();
    int torder = j.order / 2;
    for (int i = 0; i < 4; ++i) {
      HData hd = h_from_factor(elliptic_poly_eval(f[static_cast<size_t>(i)], 2 * torder + 16), i + 1, 5);
      ResidualCheck rc = check_residual(okamoto_residual(hd.h, hd.n));
      Json e = report_to_json("f" + std::to_string(i + 1), 0, 5, rc);
      e["n"] = okamoto_to_json(hd.n);
      ff.push_back(e);
      pass = pass && rc.vanishes && rc.order_verified >= torder;
    }
    doc["four_factor_product_equals_corr"] = prod_ok;
    doc["factors"] = ff;
    pass = pass && prod_ok;
  }
  doc["pass"] = pass;
  return finish(j, doc, pass, out);
}

// ---- identities
int cmd_identities(const JobSpec& j, std::ostream& out) {
  IdentityReport rep = verify_hypergeometric_identities(j.order);
  Json doc;
  doc["order"] = j.order;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["group"] = c.group;
    e["name"] = c.name;
    e["variable"] = c.variable;
    e["order"] = c.order;
    e["holds"] = c.holds;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(e);
  }
  doc["checks"] = checks;
  doc["all_hold"] = rep.all_hold();
  return finish(j, doc, rep.all_hold(), out);
}

// ---- selftest: one line per criterion on `out`; JSON summary to --output if given
int cmd_selftest(const JobSpec& j, std::ostream& out) {
  AcceptanceOptions opt;
  opt.fixture_dir = j.fixture_dir;
  bool all = true;
  Json doc = Json::array();
  for (int i = 1; i <= kCriteria; ++i) {
    CriterionResult r = run_criterion(i, opt);
    out << format_result(r) << std::endl;
    all = all && r.pass;
    Json e;
    e["id"] = r.id;
    e["title"] = r.title;
    e["pass"] = r.pass;
    e["failures"] = r.failures;
    doc.push_back(e);
  }
  out << (all ? "selftest: all criteria pass" : "selftest: FAILED") << std::endl;
  if (!j.output.empty()) emit(j, dump(doc), out);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_job(const JobSpec& j, std::ostream& out, std::ostream& err) {
  try {
    validate(j);
    switch (j.command) {
      case Command::Corr: return cmd_corr(j, out, err);
      case Command::VerifyOde: return cmd_verify_ode(j, out);
      case Command::FitCosgrove: return cmd_fit(j, out);
      case Command::Okamoto: return cmd_okamoto(j, out);
      case Command::Boundary: return cmd_boundary(j, out);
      case Command::Factor: return cmd_factor(j, out);
      case Command::Identities: return cmd_identities(j, out);
      case Command::Selftest: return cmd_selftest(j, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SerializeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundaryError& e) {
    err << "boundary: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace ising
