#include "loopforge/perm_group.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_set>

#include "loopforge/errors.hpp"

namespace loopforge {

namespace {

constexpr int kSeriesCap = 32;  // derived / lower-central iteration bound

std::vector<Perm> dedup_nonidentity(std::vector<Perm> gens) {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > ~0ull) fail(Errc::enumeration_too_large, "group order overflows 64 bits");
  return static_cast<std::uint64_t>(p);
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  if (degree < 1) fail(Errc::degree_mismatch, "permutation degree must be positive");
  PermGroup G;
  G.degree_ = degree;
  return G;
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens) {
  return from_generators(std::move(gens), {});
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens, const std::vector<int>& base_hint) {
  if (gens.empty()) fail(Errc::degree_mismatch, "from_generators needs at least one permutation to fix the degree");
  PermGroup G;
  G.degree_ = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != G.degree_) fail(Errc::degree_mismatch, "generators have mixed degrees");
  G.gens_ = dedup_nonidentity(std::move(gens));
  G.build(base_hint);
  return G;
}

void PermGroup::new_level(int beta) {
  if (beta < 0 || beta >= degree_) fail(Errc::degree_mismatch, "base point out of range");
  Level lv;
  lv.beta = beta;
  lv.orbit.push_back(beta);
  lv.transversal.push_back(Perm(degree_));
  lv.slot.assign(static_cast<std::size_t>(degree_), -1);
  lv.slot[static_cast<std::size_t>(beta)] = 0;
  levels_.push_back(std::move(lv));
}

void PermGroup::extend_orbit(std::size_t li) {
  Level& lv = levels_[li];
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    for (const Perm& g : lv.gens) {
      int img = g[lv.orbit[oi]];
      if (lv.slot[static_cast<std::size_t>(img)] < 0) {
        lv.slot[static_cast<std::size_t>(img)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        lv.transversal.push_back(lv.transversal[oi] * g);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t li = from; li < levels_.size(); ++li) {
    const Level& lv = levels_[li];
    int img = g[lv.beta];
    int s = lv.slot[static_cast<std::size_t>(img)];
    if (s < 0) return {std::move(g), li};
    g = g * lv.transversal[static_cast<std::size_t>(s)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::verify_level(std::size_t li) {
  // Every Schreier generator of this level must sift to the identity through
  // the deeper levels; residues become strong generators there.  Orbit points
  // and generators added at deeper levels never change this level's pairs, so
  // a single pass suffices.
  for (std::size_t oi = 0; oi < levels_[li].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
      const Level& lv = levels_[li];
      Perm sg = lv.transversal[oi] * lv.gens[si];
      int img = sg[lv.beta];
      sg = sg * lv.transversal[static_cast<std::size_t>(lv.slot[static_cast<std::size_t>(img)])].inverse();
      if (sg.is_identity()) continue;
      auto [h, j] = strip(std::move(sg), li + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) new_level(h.first_moved());
      // h fixes the base points of every level up to j, so it belongs to each
      // of those chain subgroups (the generator sets stay nested).
      for (std::size_t l = li + 1; l <= j; ++l) {
        levels_[l].gens.push_back(h);
        extend_orbit(l);
      }
      for (std::size_t l = j; l > li; --l) verify_level(l);
    }
  }
}

void PermGroup::build(const std::vector<int>& base_hint) {
  for (int b : base_hint) new_level(b);
  if (gens_.empty()) {
    compute_order();
    return;
  }
  if (levels_.empty()) new_level(gens_.front().first_moved());
  // Seed each hinted level with the generators fixing all earlier base points.
  for (const Perm& g : gens_) {
    for (std::size_t li = 0; li < levels_.size(); ++li) {
      if (li > 0 && g[levels_[li - 1].beta] != levels_[li - 1].beta) break;
      levels_[li].gens.push_back(g);
    }
  }
  for (std::size_t li = levels_.size(); li-- > 0;) extend_orbit(li);
  verify_level(0);
  compute_order();
}

void PermGroup::compute_order() {
  order_ = 1;
  for (const Level& lv : levels_) order_ = checked_mul(order_, lv.orbit.size());
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) fail(Errc::degree_mismatch, "membership test across degrees");
  auto [h, li] = strip(g, 0);
  return li == levels_.size() && h.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) fail(Errc::enumeration_too_large, "group has " + std::to_string(order_) + " elements, cap is " + std::to_string(cap));
  std::vector<Perm> out{Perm(degree_)};
  // An element factors uniquely as t_{k-1} ... t_1 t_0 with t_i in the
  // level-i transversal, matching how strip() peels factors off.
  for (std::size_t li = levels_.size(); li-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[li].transversal.size());
    for (const Perm& t : out)
      for (const Perm& u : levels_[li].transversal) next.push_back(t * u);
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) fail(Errc::degree_mismatch, "stabilized point out of range");
  if (gens_.empty()) return trivial(degree_);
  PermGroup chain = from_generators(gens_, {point});
  // With point as the first base, the level-1 generators generate exactly the
  // stabilizer (nested strong generating sets).
  if (chain.levels_.size() < 2 || chain.levels_[1].gens.empty()) return trivial(degree_);
  return from_generators(chain.levels_[1].gens);
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) fail(Errc::degree_mismatch, "orbit point out of range");
  std::vector<int> orb{point};
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Perm& g : gens_) {
      int img = g[orb[i]];
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = 1;
        orb.push_back(img);
      }
    }
  }
  return orb;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.beta);
  return b;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> all;
  for (const Level& lv : levels_) all.insert(all.end(), lv.gens.begin(), lv.gens.end());
  return dedup_nonidentity(std::move(all));
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& s : seed) {
    if (s.degree() != G.degree()) fail(Errc::degree_mismatch, "normal closure seed across degrees");
    if (!s.is_identity() && seen.insert(s).second) gens.push_back(s);
  }
  if (gens.empty()) return PermGroup::trivial(G.degree());
  PermGroup H = PermGroup::from_generators(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Perm c = conjugate(gens[i], g);
      if (!H.contains(c)) {
        gens.push_back(std::move(c));
        H = PermGroup::from_generators(gens);
      }
    }
  }
  return H;
}

PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Perm> seed;
  const auto& gs = G.generators();
  for (const Perm& a : gs)
    for (const Perm& b : gs) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  return normal_closure(G, seed);
}

int derived_length(const PermGroup& G) {
  PermGroup H = G;
  int len = 0;
  while (!H.is_trivial()) {
    if (++len > kSeriesCap) fail(Errc::not_solvable, "derived series exceeds " + std::to_string(kSeriesCap) + " steps");
    PermGroup next = derived_subgroup(H);
    if (next.order() == H.order()) fail(Errc::not_solvable, "derived series stabilizes at order " + std::to_string(H.order()));
    H = std::move(next);
  }
  return len;
}

PermGroup center(const PermGroup& G, std::uint64_t cap) {
  std::vector<Perm> central;
  for (Perm& e : G.elements(cap)) {
    bool ok = true;
    for (const Perm& g : G.generators())
      if (e * g != g * e) {
        ok = false;
        break;
      }
    if (ok && !e.is_identity()) central.push_back(std::move(e));
  }
  if (central.empty()) return PermGroup::trivial(G.degree());
  return PermGroup::from_generators(std::move(central));
}

int nilpotency_class(const PermGroup& G) {
  PermGroup gamma = G;
  int cls = 0;
  while (!gamma.is_trivial()) {
    if (++cls > kSeriesCap) fail(Errc::not_nilpotent, "lower central series exceeds " + std::to_string(kSeriesCap) + " steps");
    std::vector<Perm> seed;
    for (const Perm& g : G.generators())
      for (const Perm& c : gamma.generators()) {
        Perm k = commutator(g, c);
        if (!k.is_identity()) seed.push_back(std::move(k));
      }
    PermGroup next = normal_closure(G, seed);
    if (next.order() == gamma.order()) fail(Errc::not_nilpotent, "lower central series stabilizes at order " + std::to_string(gamma.order()));
    gamma = std::move(next);
  }
  return cls;
}

bool is_abelian(const PermGroup& G) {
  const auto& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

bool is_elementary_abelian(const PermGroup& G, int p) {
  if (p < 2) fail(Errc::internal_inconsistency, "elementary abelian test needs a prime");
  if (!is_abelian(G)) return false;
  for (const Perm& g : G.generators())
    if (g.order() != static_cast<std::uint64_t>(p)) return false;  // generators are never the identity
  return true;
}

bool equal_groups(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree() || G.order() != H.order()) return false;
  for (const Perm& g : G.generators())
    if (!H.contains(g)) return false;
  return true;
}

bool is_normal_subgroup(const PermGroup& G, const PermGroup& N) {
  if (G.degree() != N.degree()) return false;
  for (const Perm& n : N.generators())
    if (!G.contains(n)) return false;
  for (const Perm& n : N.generators())
    for (const Perm& g : G.generators())
      if (!N.contains(conjugate(n, g))) return false;
  return true;
}

bool quotient_is_elementary_abelian(const PermGroup& G, const PermGroup& N, int p) {
  if (!is_normal_subgroup(G, N)) fail(Errc::not_normal, "quotient by a non-normal subgroup");
  const auto& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!N.contains(commutator(gs[i], gs[j]))) return false;
  for (const Perm& g : gs) {
    Perm gp(G.degree());
    for (int k = 0; k < p; ++k) gp = gp * g;
    if (!N.contains(gp)) return false;
  }
  return true;
}

}  // namespace loopforge
