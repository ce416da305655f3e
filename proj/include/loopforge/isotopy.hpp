#pragma once

#include <optional>
#include <vector>

#include "loopforge/loop_table.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

/// The a-isotope x∘y = (x·a)·(a\y).  The result must again be a loop; inputs
/// without the right inverse property can fail the identity scan, which
/// surfaces as no_identity.
LoopTable principal_isotope(const LoopTable& L, int a);

/// An explicit isomorphism L1 -> L2 (phi(x·y) = phi(x)∘phi(y)) when one
/// exists.  Exact color refinement prunes, then a generator-image backtracking
/// search with forced closure decides.
std::optional<Perm> is_isomorphic(const LoopTable& L1, const LoopTable& L2);

struct IsotopyClass {
  int representative = 0;    // smallest element whose isotope lands here
  std::vector<int> members;  // all a with isotope isomorphic to the rep's
};

struct IsotopyPartition {
  std::vector<IsotopyClass> classes;  // ordered by representative
};

/// Partition of the n principal isotopes by isomorphism.  Throws
/// order_cap_exceeded above the cap.
IsotopyPartition isotopy_classes(const LoopTable& L, int cap = 64);

}  // namespace loopforge
