#include "ising/elliptic_poly.hpp"

#include "ising/hypergeometric.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#ifndef ISING_FIXTURE_DIR
#define ISING_FIXTURE_DIR "fixtures"
#endif

namespace ising {

namespace {

TPoly poly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

TPoly poly_add(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool poly_equal(const TPoly& a, const TPoly& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    Rational x = i < a.size() ? a[i] : Rational(0);
    Rational y = i < b.size() ? b[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

RatFuncT rf_add(const RatFuncT& a, const RatFuncT& b) {
  if (poly_equal(a.den, b.den)) return {poly_add(a.num, b.num), a.den};
  return {poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)), poly_mul(a.den, b.den)};
}

RatFuncT rf_mul(const RatFuncT& a, const RatFuncT& b) { return {poly_mul(a.num, b.num), poly_mul(a.den, b.den)}; }

SeriesK poly_series(const TPoly& p, int korder) {
  std::vector<Rational> cs;
  for (size_t i = 0; i < p.size(); ++i) {
    if (static_cast<int>(2 * i) > korder) break;
    cs.resize(2 * i + 1);
    cs[2 * i] = p[i];
  }
  return SeriesK::from_coeffs(0, std::move(cs), korder);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw SeriesError("fixture " + origin + ":" + std::to_string(line) + ": " + msg);
}

TPoly parse_tuple(const std::string& s, const std::string& origin, int line) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(origin, line, "expected (c0,c1,...) got '" + s + "'");
  TPoly p;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(parse_rational(trim(item)));
    } catch (const std::exception& e) {
      fail(origin, line, e.what());
    }
  }
  if (p.empty()) fail(origin, line, "empty coefficient tuple");
  return p;
}

int parse_power(const std::string& tok, char base, const std::string& origin, int line) {
  if (tok.size() < 3 || tok[0] != base || tok[1] != '^') fail(origin, line, std::string("expected ") + base + "^n");
  try {
    return std::stoi(tok.substr(2));
  } catch (const std::exception&) {
    fail(origin, line, "bad exponent in '" + tok + "'");
  }
}

EllipticTerm parse_term(const std::string& text, const std::string& origin, int line) {
  std::istringstream in(text);
  std::string coeff, e, k, extra;
  if (!(in >> coeff >> e >> k) || (in >> extra)) fail(origin, line, "term needs '<coeff> E^a K^b'");
  EllipticTerm t;
  size_t slash = coeff.find(")/(");
  if (slash == std::string::npos) {
    t.coeff.num = parse_tuple(coeff, origin, line);
  } else {
    t.coeff.num = parse_tuple(coeff.substr(0, slash + 1), origin, line);
    t.coeff.den = parse_tuple(coeff.substr(slash + 2), origin, line);
  }
  t.e_exp = parse_power(e, 'E', origin, line);
  t.k_exp = parse_power(k, 'K', origin, line);
  if (t.e_exp < 0 || t.k_exp < 0) fail(origin, line, "negative E/K exponent");
  return t;
}

}  // namespace

bool EllipticPoly::homogeneous() const {
  for (const auto& t : terms)
    if (t.e_exp + t.k_exp != terms.front().e_exp + terms.front().k_exp) return false;
  return true;
}

EllipticPoly elliptic_poly_product(const EllipticPoly& a, const EllipticPoly& b) {
  std::map<std::pair<int, int>, RatFuncT> acc;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      auto key = std::make_pair(x.e_exp + y.e_exp, x.k_exp + y.k_exp);
      RatFuncT c = rf_mul(x.coeff, y.coeff);
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, c);
      else it->second = rf_add(it->second, c);
    }
  EllipticPoly r;
  // descending powers of E~, matching how the closed forms are usually printed
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) r.terms.push_back({it->second, it->first.first, it->first.second});
  r.t_pow = a.t_pow + b.t_pow;
  r.omt_pow = a.omt_pow + b.omt_pow;
  r.constant = a.constant * b.constant;
  return r;
}

SeriesK elliptic_poly_eval(const EllipticPoly& p, int order) {
  Rational two_tp = 2 * p.t_pow;
  if (!is_integer(two_tp)) throw SeriesError("elliptic_poly_eval: t-power must be a multiple of 1/2");
  int shift = static_cast<int>(to_long(two_tp));
  if (p.terms.empty() || p.constant == 0) return SeriesK::zero(order);
  SeriesK out = compute_to_order(order, [&](int w) {
    int inner = w - shift;
    if (inner < 0) inner = 0;
    SeriesK E = elliptic_series(Elliptic::E, inner);
    SeriesK K = elliptic_series(Elliptic::K, inner);
    SeriesK sum = SeriesK::zero(inner);
    for (const auto& t : p.terms) {
      SeriesK c = poly_series(t.coeff.num, inner) / poly_series(t.coeff.den, inner);
      sum += c * series_pow_int(E, t.e_exp) * series_pow_int(K, t.k_exp);
    }
    SeriesK pre = one_minus_t_pow(p.omt_pow, inner);
    return (p.constant * (pre * sum)).shift(shift);
  });
  if (!out.is_zero() && out.valuation() < 0)
    throw SeriesError("elliptic_poly_eval: uncancelled pole at t = 0");
  return out.truncate(order);
}

Fixture parse_fixture(const std::string& text, const std::string& origin) {
  Fixture f;
  f.path = origin;
  EllipticPoly acc;
  acc.terms.push_back({RatFuncT{}, 0, 0});
  bool have_corr = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string key;
    ls >> key;
    if (key == "name") {
      ls >> f.name;
    } else if (key == "corr") {
      std::string reg, tl;
      if (!(ls >> reg >> f.M >> f.N)) fail(origin, line, "corr needs 'low|high M N'");
      if (reg == "low") f.regime = Regime::LowT;
      else if (reg == "high") f.regime = Regime::HighT;
      else fail(origin, line, "regime must be low or high");
      if (ls >> tl) {
        if (tl != "tilde") fail(origin, line, "unexpected '" + tl + "'");
        f.tilde = true;
      }
      have_corr = true;
    } else if (key == "prefactor") {
      std::string c, tp, op;
      if (!(ls >> c >> tp >> op)) fail(origin, line, "prefactor needs '<const> <t-power> <(1-t)-power>'");
      try {
        acc.constant *= parse_rational(c);
        acc.t_pow += parse_rational(tp);
        acc.omt_pow += parse_rational(op);
      } catch (const std::exception& e) {
        fail(origin, line, e.what());
      }
    } else if (key == "factor") {
      std::string rest;
      std::getline(ls, rest);
      EllipticPoly fac;
      std::stringstream ts(rest);
      std::string item;
      while (std::getline(ts, item, ';'))
        if (!trim(item).empty()) fac.terms.push_back(parse_term(trim(item), origin, line));
      if (fac.terms.empty()) fail(origin, line, "empty factor");
      acc = elliptic_poly_product(acc, fac);
    } else {
      fail(origin, line, "unknown key '" + key + "'");
    }
  }
  if (!have_corr) fail(origin, line, "missing corr line");
  if (f.name.empty()) f.name = origin;
  f.poly = acc;
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SeriesError("cannot open fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), path);
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".txt") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) out.push_back(load_fixture(p));
  return out;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("ISING_FIXTURE_DIR")) return env;
  return ISING_FIXTURE_DIR;
}

std::vector<EllipticPoly> c05_factors() {
  auto term = [](std::vector<Rational> c, int e, int k) {
    EllipticTerm t;
    t.coeff.num = std::move(c);
    t.e_exp = e;
    t.k_exp = k;
    return t;
  };
  std::vector<EllipticPoly> f(4);
  f[0].terms = {term({-1, 2}, 1, 0), term({1, -1}, 0, 1)};
  f[1].terms = {term({1, 1}, 1, 0), term({-1, 1}, 0, 1)};
  f[2].terms = {term({-2, 1}, 1, 0), term({2, -2}, 0, 1)};
  f[3].terms = {term({3}, 2, 0), term({-4, 2}, 1, 1), term({1, -1}, 0, 2)};
  return f;
}

EllipticPoly c05_product() {
  auto f = c05_factors();
  EllipticPoly p = f[0];
  for (size_t i = 1; i < f.size(); ++i) p = elliptic_poly_product(p, f[i]);
  p.constant = rat(256, 81);
  p.t_pow = -6;
  p.omt_pow = rat(1, 2);
  return p;
}

}  // namespace ising
