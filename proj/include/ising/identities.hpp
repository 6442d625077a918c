#ifndef ISING_IDENTITIES_HPP
#define ISING_IDENTITIES_HPP

#include "ising/series.hpp"

#include <string>
#include <vector>

namespace ising {

struct IdentityCheck {
  std::string name;
  std::string group;
  bool holds = false;
  int order = 0;          // last power (in the check's variable) compared
  std::string variable;   // "t", "k" or "alpha"
  std::string note;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

// exact agreement of two series through `order`; false if either is not known that far
bool equal_through(const SeriesK& a, const SeriesK& b, int order);

// contiguous relations, quadratic transformation, high-T element reductions and the
// elliptic Pi reduction, each checked through `order` in its own variable
IdentityReport verify_hypergeometric_identities(int order);

}  // namespace ising

#endif
