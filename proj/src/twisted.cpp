#include "loopforge/twisted.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "loopforge/errors.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

GroupTable GroupTable::certify(LoopTable table) {
  if (!is_associative(table)) fail(Errc::not_associative, "table is not a group");
  GroupTable G(std::move(table));
  G.inv_.resize(static_cast<std::size_t>(G.size()));
  for (int x = 0; x < G.size(); ++x)
    G.inv_[static_cast<std::size_t>(x)] = G.table_.ldiv(x, G.identity());
  return G;
}

bool TwistedSubset::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

const char* broken_axiom(const GroupTable& G, const std::vector<int>& T) {
  std::vector<char> in(static_cast<std::size_t>(G.size()), 0);
  for (int t : T) {
    if (t < 0 || t >= G.size()) return "member out of range";
    in[static_cast<std::size_t>(t)] = 1;
  }
  if (!in[static_cast<std::size_t>(G.identity())]) return "1 ∈ T fails";
  for (int t : T)
    if (!in[static_cast<std::size_t>(G.inv(t))]) return "T^-1 = T fails";
  for (int x : T)
    for (int t : T)
      if (!in[static_cast<std::size_t>(G.mul(G.mul(x, t), x))]) return "xTx ⊆ T fails";
  return nullptr;
}

}  // namespace

bool is_twisted_subgroup(const GroupTable& G, const std::vector<int>& T) {
  return broken_axiom(G, T) == nullptr;
}

TwistedSubset twisted_subset(const GroupTable& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (const char* why = broken_axiom(G, members))
    fail(Errc::construction_failed, std::string("not a twisted subgroup: ") + why);
  return TwistedSubset{std::move(members)};
}

TwistedSubset k_tau(const GroupTable& G, const Perm& tau) {
  if (!is_automorphism(G.table(), tau)) fail(Errc::not_automorphism, "tau is not an automorphism of G");
  if (!(tau * tau).is_identity()) fail(Errc::not_involutory, "tau squared is not the identity");
  std::vector<int> members;
  for (int g = 0; g < G.size(); ++g)
    if (tau[g] == G.inv(g)) members.push_back(g);
  TwistedSubset T{std::move(members)};
  if (const char* why = broken_axiom(G, T.members))
    fail(Errc::internal_inconsistency, std::string("K(tau) is not twisted: ") + why);
  return T;
}

std::vector<int> aschbacher_radical(const GroupTable& G, const TwistedSubset& T, int cap) {
  int n = G.size();
  if (n > cap)
    fail(Errc::order_cap_exceeded,
         "radical BFS capped at order " + std::to_string(cap) + ", got " + std::to_string(n));

  // States are pairs (forward product, inverse-word product).
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> queue;
  auto push = [&](int a, int b) {
    std::size_t idx = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
    if (!seen[idx]) {
      seen[idx] = 1;
      queue.emplace_back(a, b);
    }
  };
  push(G.identity(), G.identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [a, b] = queue[i];
    for (int x : T.members) push(G.mul(a, x), G.mul(b, G.inv(x)));
  }

  std::vector<int> radical;
  for (int a = 0; a < n; ++a)
    if (seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(G.identity())])
      radical.push_back(a);

  // Certify: a subgroup, normal in <T>.
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int r : radical) in[static_cast<std::size_t>(r)] = 1;
  for (int r : radical)
    for (int s : radical)
      if (!in[static_cast<std::size_t>(G.mul(r, s))])
        fail(Errc::internal_inconsistency, "radical is not multiplicatively closed");
  for (int h : subloop_generated(G.table(), T.members).members)
    for (int r : radical)
      if (!in[static_cast<std::size_t>(G.conj(r, h))])
        fail(Errc::internal_inconsistency, "radical is not normal in <T>");
  return radical;
}

bool is_u2d_twisted(const GroupTable& G, const TwistedSubset& T) {
  // x e x = x^2 keeps squares inside T, so squaring maps T into T; bijective
  // on T iff injective.
  std::vector<char> hit(static_cast<std::size_t>(G.size()), 0);
  for (int t : T.members) {
    int sq = G.mul(t, t);
    if (hit[static_cast<std::size_t>(sq)]) return false;
    hit[static_cast<std::size_t>(sq)] = 1;
  }
  for (int t : T.members)
    if (!hit[static_cast<std::size_t>(t)]) return false;
  return true;
}

int sqrt_in(const GroupTable& G, const TwistedSubset& T, int x) {
  if (x < 0 || x >= G.size()) fail(Errc::bad_dimensions, "element out of range");
  if (!T.contains(x)) fail(Errc::bad_dimensions, "element is not a member of T");

  // Odd-order elements have the closed-form root x^((k+1)/2); the scan below
  // still runs to certify that the root is unique within T, which the formula
  // alone cannot see.
  int root = -1;
  int k = G.table().element_order(x);
  if (k % 2 == 1) root = G.table().power(x, (k + 1) / 2);
  int scanned = -1;
  for (int t : T.members)
    if (G.mul(t, t) == x) {
      if (scanned >= 0)
        fail(Errc::not_uniquely_2_divisible, "two square roots in T for element " + std::to_string(x + 1));
      scanned = t;
    }
  if (scanned < 0)
    fail(Errc::not_uniquely_2_divisible, "no square root in T for element " + std::to_string(x + 1));
  if (root >= 0 && root != scanned)
    fail(Errc::internal_inconsistency, "power-formula root disagrees with scan");
  return scanned;
}

LoopTable t_half(const GroupTable& G, const TwistedSubset& T) {
  if (!is_u2d_twisted(G, T))
    fail(Errc::not_uniquely_2_divisible, "squaring is not a bijection of T");

  int m = static_cast<int>(T.members.size());
  std::vector<int> pos(static_cast<std::size_t>(G.size()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(T.members[static_cast<std::size_t>(i)])] = i;

  std::vector<int> cells(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int x = T.members[static_cast<std::size_t>(i)];
    int x2 = G.mul(x, x);
    for (int j = 0; j < m; ++j) {
      int y = T.members[static_cast<std::size_t>(j)];
      int z = sqrt_in(G, T, G.mul(G.mul(y, x2), y));
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(z)];
    }
  }
  LoopTable Q = LoopTable::from_cells(m, std::move(cells));
  if (!is_bruck(Q)) fail(Errc::construction_failed, "T(1/2) output failed the Bruck certification");
  if (!is_uniquely_2_divisible(Q))
    fail(Errc::construction_failed, "T(1/2) output is not uniquely 2-divisible");
  return Q;
}

LoopTable t_half(const GroupTable& G) {
  std::vector<int> all(static_cast<std::size_t>(G.size()));
  for (int i = 0; i < G.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return t_half(G, twisted_subset(G, std::move(all)));
}

bool thalf_commutes(const GroupTable& G, int x, int y) {
  if (x < 0 || x >= G.size() || y < 0 || y >= G.size()) fail(Errc::bad_dimensions, "element out of range");
  return G.comm(x, y) == G.comm(G.inv(x), G.inv(y));
}

std::optional<Perm> find_inverting_automorphism(const GroupTable& G, const TwistedSubset& T) {
  int n = G.size();
  if (subloop_generated(G.table(), T.members).size() != n)
    fail(Errc::construction_failed, "T does not generate G, so the extension is not determined");

  // tau must invert T; being multiplicative on <T> = G pins it down entirely.
  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  std::vector<int> mapped;
  auto set = [&](int g, int img) {
    int& slot = tau[static_cast<std::size_t>(g)];
    if (slot >= 0) return slot == img;
    slot = img;
    mapped.push_back(g);
    return true;
  };
  for (int t : T.members)
    if (!set(t, G.inv(t))) return std::nullopt;
  for (std::size_t i = 0; i < mapped.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{mapped[i], mapped[j]}, std::pair{mapped[j], mapped[i]}})
        if (!set(G.mul(a, b), G.mul(tau[static_cast<std::size_t>(a)], tau[static_cast<std::size_t>(b)])))
          return std::nullopt;

  if (static_cast<int>(mapped.size()) != n) return std::nullopt;  // unreachable given <T> = G
  Perm p{std::move(tau)};
  if (!is_automorphism(G.table(), p) || !(p * p).is_identity()) return std::nullopt;
  return p;
}

}  // namespace loopforge
