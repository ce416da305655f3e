#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "loopforge/perm.hpp"

namespace loopforge {

/// A finitely generated permutation group backed by a deterministic
/// Schreier-Sims stabilizer chain.  Base points are chosen as the smallest
/// moved point not yet fixed, so the chain (and everything derived from it)
/// is reproducible for a given generator list.  Immutable once built; safe
/// for concurrent queries.
class PermGroup {
 public:
  static constexpr std::uint64_t kDefaultEnumCap = 1ull << 20;

  static PermGroup trivial(int degree);
  static PermGroup from_generators(std::vector<Perm> gens);
  /// Forces the given points to be used as the first base points, in order.
  /// stabilizer() relies on this to read off stabilizer generators.
  static PermGroup from_generators(std::vector<Perm> gens, const std::vector<int>& base_hint);

  int degree() const { return degree_; }
  /// The (deduplicated, identity-free) input generators.
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  /// All group elements, in deterministic chain order.  Throws
  /// enumeration_too_large when order() exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap = kDefaultEnumCap) const;

  /// Pointwise stabilizer of a single point, as a fresh group.
  PermGroup stabilizer(int point) const;
  std::vector<int> orbit(int point) const;

  std::vector<int> base() const;
  std::vector<Perm> strong_generators() const;

 private:
  struct Level {
    int beta = 0;
    std::vector<Perm> gens;         // generators of the chain subgroup at this level
    std::vector<int> orbit;         // discovery order; orbit[0] == beta
    std::vector<Perm> transversal;  // transversal[i] maps beta to orbit[i]
    std::vector<int> slot;          // point -> orbit index, or -1
  };

  PermGroup() = default;
  void build(const std::vector<int>& base_hint);
  void new_level(int beta);
  void extend_orbit(std::size_t li);
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void verify_level(std::size_t li);
  void compute_order();

  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

PermGroup derived_subgroup(const PermGroup& G);
/// Number of steps of the derived series until trivial.  Throws not_solvable
/// if the series goes stationary above the trivial group.
int derived_length(const PermGroup& G);

/// Center via bounded element enumeration.  Throws enumeration_too_large.
PermGroup center(const PermGroup& G, std::uint64_t cap = PermGroup::kDefaultEnumCap);
/// Length of the lower central series until trivial.  Throws not_nilpotent.
int nilpotency_class(const PermGroup& G);

bool is_abelian(const PermGroup& G);
/// Abelian with every non-identity element of order p.  In an abelian group
/// the generator orders decide this.
bool is_elementary_abelian(const PermGroup& G, int p);
bool equal_groups(const PermGroup& G, const PermGroup& H);
bool is_normal_subgroup(const PermGroup& G, const PermGroup& N);

/// Smallest subgroup of G containing the seed permutations that is closed
/// under conjugation by G's generators.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

/// Whether G/N is elementary abelian of exponent p.  Throws not_normal if N
/// is not a normal subgroup of G.
bool quotient_is_elementary_abelian(const PermGroup& G, const PermGroup& N, int p);

}  // namespace loopforge
