#pragma once

#include <vector>

#include "loopforge/loop_table.hpp"
#include "loopforge/perm.hpp"
#include "loopforge/perm_group.hpp"

namespace loopforge {

/// A subloop given by its sorted member indices.  Functions taking one
/// validate the closure invariants against the parent table and throw
/// not_a_subloop on violation.
struct SubloopSet {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  friend bool operator==(const SubloopSet&, const SubloopSet&) = default;
};

/// The standard generators of Inn(Q):
///   R_{x,y} = R_x R_y R_{xy}^-1,  T_x = R_x L_x^-1,  L_{x,y} = L_x L_y L_{yx}^-1.
struct InnerGenerators {
  std::vector<Perm> r;  // R_{x,y}, row-major over (x, y)
  std::vector<Perm> t;  // T_x
  std::vector<Perm> l;  // L_{x,y}, row-major over (x, y)

  std::vector<Perm> all() const;
  std::vector<Perm> distinct() const;  // deduplicated, deterministic order
};

PermGroup mlt(const LoopTable& L);
PermGroup rmlt(const LoopTable& L);
PermGroup lmlt(const LoopTable& L);
/// Stabilizers of the identity in mlt / rmlt / lmlt.
PermGroup inn(const LoopTable& L);
PermGroup rinn(const LoopTable& L);
PermGroup linn(const LoopTable& L);

InnerGenerators inner_generators(const LoopTable& L);

SubloopSet nucleus_left(const LoopTable& L);
SubloopSet nucleus_middle(const LoopTable& L);
SubloopSet nucleus_right(const LoopTable& L);
SubloopSet nucleus(const LoopTable& L);

/// Elements commuting with everything (resp. with x).  Plain element sets:
/// the commutant of a loop need not be closed under multiplication.
std::vector<int> commutant(const LoopTable& L);
std::vector<int> commutant_of(const LoopTable& L, int x);

/// Z(Q), computed both as nucleus ∩ commutant and as the common fixed points
/// of the inner generators; disagreement raises internal_inconsistency.
SubloopSet center_loop(const LoopTable& L);

bool is_subloop(const LoopTable& L, const std::vector<int>& members);
SubloopSet subloop_generated(const LoopTable& L, const std::vector<int>& seed);

bool is_normal(const LoopTable& L, const SubloopSet& S);
SubloopSet normal_closure_loop(const LoopTable& L, const SubloopSet& S);

/// Q' and A(Q) as certified normal closures: the quotient property is
/// re-checked on the result, and at desk scale (n <= 128) minimality is
/// certified against the full normal-subloop lattice.
SubloopSet derived_subloop(const LoopTable& L);
SubloopSet associator_subloop(const LoopTable& L);

/// Coset table Q/N with smallest-member representatives; throws not_normal /
/// ill_defined.
LoopTable quotient(const LoopTable& L, const SubloopSet& N);
/// The Cayley table of a subloop, relabeled along sorted members.
LoopTable subtable(const LoopTable& L, const SubloopSet& S);

/// The full lattice, as join-closure of singleton normal closures; sorted by
/// (size, members).  Throws order_cap_exceeded above the cap.
std::vector<SubloopSet> all_normal_subloops(const LoopTable& L, int cap = 256);
bool is_simple(const LoopTable& L);

bool is_solvable(const LoopTable& L);
/// Ascending chain {e} = Z0 < Z1 < ... up to its stabilization point.
std::vector<SubloopSet> upper_central_series(const LoopTable& L);
bool is_centrally_nilpotent(const LoopTable& L);

bool is_automorphism(const LoopTable& L, const Perm& p);

}  // namespace loopforge
