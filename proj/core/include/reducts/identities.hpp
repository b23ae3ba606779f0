#pragma once

#include <string>
#include <vector>

namespace reducts {

/// One symbolic identity between term functions, checked by exact
/// normal-form equality.
struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds;
  /// Findings are reported but do not count toward the suite's verdict.
  bool finding = false;
};

/// Binary-generator identities, the median translation identity, the
/// Sigma / Sigma1 / complement interdefinitions, the coatom intersection
/// identities and the recursive linear chains up to arity 9.
std::vector<IdentityCheck> identity_suite();

/// True iff every non-finding identity holds.
bool all_hold(const std::vector<IdentityCheck>& checks);

} // namespace reducts
