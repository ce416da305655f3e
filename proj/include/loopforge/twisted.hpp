#pragma once

#include <optional>
#include <vector>

#include "loopforge/loop_table.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

/// A Cayley table certified associative, with the group extras precomputed.
class GroupTable {
 public:
  /// Throws not_associative when the table fails the O(n^3) scan.
  static GroupTable certify(LoopTable table);

  const LoopTable& table() const { return table_; }
  int size() const { return table_.size(); }
  int identity() const { return table_.identity(); }
  int mul(int x, int y) const { return table_.mul(x, y); }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  int conj(int x, int y) const { return mul(mul(inv(y), x), y); }  // x^y
  int comm(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }  // [x,y]

 private:
  explicit GroupTable(LoopTable t) : table_(std::move(t)) {}
  LoopTable table_;
  std::vector<int> inv_;
};

/// Subset of a group satisfying 1 ∈ T, T^-1 = T, xTx ⊆ T.
struct TwistedSubset {
  std::vector<int> members;  // sorted
  bool contains(int x) const;
};

bool is_twisted_subgroup(const GroupTable& G, const std::vector<int>& T);
/// Validating factory; throws construction_failed naming the broken axiom.
TwistedSubset twisted_subset(const GroupTable& G, std::vector<int> members);

/// K(tau) = {g : g^tau = g^-1}; tau must be an involutory automorphism of G.
TwistedSubset k_tau(const GroupTable& G, const Perm& tau);

/// T' = {x1...xn : x1^-1 ... xn^-1 = 1, xi in T}, realized as reachability in
/// the |G|^2 pair graph (a,b) -> (a·x, b·x^-1); certified to be a subgroup
/// normal in <T>.  Throws order_cap_exceeded when |G| > cap.
std::vector<int> aschbacher_radical(const GroupTable& G, const TwistedSubset& T, int cap = 512);

/// Whether squaring restricted to T is a bijection of T.
bool is_u2d_twisted(const GroupTable& G, const TwistedSubset& T);
/// The unique square root of x inside T; power formula for odd-order x, scan
/// otherwise.  Throws not_uniquely_2_divisible if the root is not unique.
int sqrt_in(const GroupTable& G, const TwistedSubset& T, int x);

/// The Glauberman loop T(1/2): x⊙y = (y x^2 y)^(1/2) on T's members.  The
/// output is certified Bruck and uniquely 2-divisible before it is returned.
LoopTable t_half(const GroupTable& G, const TwistedSubset& T);
/// T = all of G.
LoopTable t_half(const GroupTable& G);

/// Whether x and y commute in T(1/2), decided inside G via the criterion
/// [x,y] = [x^-1,y^-1].
bool thalf_commutes(const GroupTable& G, int x, int y);

/// For T with <T> = G: the unique candidate involutory automorphism tau with
/// T ⊆ K(tau), obtained by extending t -> t^-1 multiplicatively.  Returns
/// nullopt when the extension collapses or fails to be an automorphism.
std::optional<Perm> find_inverting_automorphism(const GroupTable& G, const TwistedSubset& T);

}  // namespace loopforge
