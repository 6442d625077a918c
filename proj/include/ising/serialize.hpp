#ifndef ISING_SERIALIZE_HPP
#define ISING_SERIALIZE_HPP

#include "ising/boundary.hpp"
#include "ising/correlation.hpp"
#include "ising/painleve.hpp"

#include <json.hpp>

#include <string>

namespace ising {

using Json = nlohmann::ordered_json;

class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"var","valuation","order","coeffs":["p/q",...]}; in_t requires even k-support
Json series_to_json(const SeriesK& s, bool in_t);
SeriesK series_from_json(const Json& j);

// header "power,num,den" then one row per stored coefficient
std::string series_to_csv(const SeriesK& s, bool in_t);

Json correlation_to_json(const Correlation& c, bool in_t);

// {family, M, N, order_verified, residual_leading_term?}
Json report_to_json(const std::string& family, int M, int N, const ResidualCheck& r);

// {branch, n, resonances:[{order,value}], coeffs}
Json branch_to_json(const BranchSolution& s);

Json okamoto_to_json(const OkamotoN& n);

// two-space indent, trailing newline
std::string dump(const Json& j);

}  // namespace ising

#endif
