#pragma once

#include <string>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Embedded datasets, addressable by name from the CLI and tests.  Includes
/// the two order-27 right Bol loops plus a stock of small groups.
std::vector<std::string> builtin_names();
LoopTable builtin_table(const std::string& name);  // throws unknown_dataset

LoopTable cyclic_group(int n);
/// Direct product of cyclic groups of the given orders.
LoopTable abelian_group(const std::vector<int>& factors);
/// Z_q semidirect Z_p with b a b^-1 = a^r; element a^i b^j has index i + q*j.
/// Requires r^p = 1 (mod q) so the product is associative.
LoopTable metacyclic_group(int q, int p, int r);
/// Heisenberg group of order 27: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
/// over Z_3, index 9a + 3b + c.
LoopTable heisenberg3();

/// All abelian groups of order n, one factor list per isomorphism class
/// (prime-power cyclic factors, deterministic order).
std::vector<std::vector<int>> abelian_factorizations(int n);

namespace detail {
extern const int kTable1Cells[27 * 27];
extern const int kTable2Cells[27 * 27];
}  // namespace detail

}  // namespace loopforge
