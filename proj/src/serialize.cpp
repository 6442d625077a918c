#include "ising/serialize.hpp"

#include <sstream>

namespace ising {

namespace {

void require_t(const SeriesK& s) {
  if (!s.even_support())
    throw SerializeError("series has odd k-support; t-output refused (use the k variable)");
}

}  // namespace

Json series_to_json(const SeriesK& s, bool in_t) {
  Json j;
  Json coeffs = Json::array();
  if (in_t) {
    require_t(s);
    j["var"] = "t";
    j["valuation"] = s.is_zero() ? s.t_order() + 1 : s.t_valuation();
    j["order"] = s.t_order();
    if (!s.is_zero())
      for (int p = s.t_valuation(); p <= s.t_order(); ++p) coeffs.push_back(to_string(s.coeff_t(p)));
  } else {
    j["var"] = "k";
    j["valuation"] = s.valuation();
    j["order"] = s.order();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  }
  j["coeffs"] = coeffs;
  return j;
}

SeriesK series_from_json(const Json& j) {
  std::string var = j.at("var").get<std::string>();
  int val = j.at("valuation").get<int>(), ord = j.at("order").get<int>();
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(x.get<std::string>()));
  if (var == "t") return SeriesK::from_t_coeffs(val, c, ord);
  if (var == "k") return SeriesK::from_coeffs(val, c, ord);
  throw SerializeError("unknown series variable '" + var + "'");
}

std::string series_to_csv(const SeriesK& s, bool in_t) {
  std::ostringstream os;
  os << "power,num,den\n";
  auto row = [&](int p, const Rational& c) {
    os << p << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
  };
  if (in_t) {
    require_t(s);
    if (!s.is_zero())
      for (int p = s.t_valuation(); p <= s.t_order(); ++p) row(p, s.coeff_t(p));
  } else {
    int p = s.valuation();
    for (const auto& c : s.coeffs()) row(p++, c);
  }
  return os.str();
}

Json correlation_to_json(const Correlation& c, bool in_t) {
  Json j;
  j["M"] = c.M;
  j["N"] = c.N;
  j["regime"] = to_string(c.regime);
  j["tilde"] = c.tilde;
  j["route"] = c.route;
  j["series"] = series_to_json(c.series, in_t);
  return j;
}

Json report_to_json(const std::string& family, int M, int N, const ResidualCheck& r) {
  Json j;
  j["family"] = family;
  j["M"] = M;
  j["N"] = N;
  j["order_verified"] = r.order_verified;
  if (!r.vanishes) j["residual_leading_term"] = r.leading_term;
  return j;
}

Json okamoto_to_json(const OkamotoN& n) {
  Json a = Json::array();
  for (const auto& x : n) a.push_back(to_string(x));
  return a;
}

Json branch_to_json(const BranchSolution& s) {
  Json j;
  j["branch"] = to_string(s.branch);
  j["n"] = okamoto_to_json(s.n);
  Json res = Json::array();
  for (const auto& r : s.resonances) {
    Json e;
    e["order"] = r.order;
    e["value"] = to_string(r.value);
    res.push_back(e);
  }
  j["resonances"] = res;
  Json c = Json::array();
  for (const auto& x : s.coeffs) c.push_back(to_string(x));
  j["coeffs"] = c;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ising
