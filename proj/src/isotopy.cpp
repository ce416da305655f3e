#include "loopforge/isotopy.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>

#include "loopforge/errors.hpp"
#include "loopforge/structure.hpp"

namespace loopforge {

LoopTable principal_isotope(const LoopTable& L, int a) {
  int n = L.size();
  if (a < 0 || a >= n) fail(Errc::bad_dimensions, "isotope base element out of range");
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int xa = L.mul(x, a);
    for (int y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          L.mul(xa, L.ldiv(a, y));
  }
  return LoopTable::from_cells(n, std::move(cells));
}

namespace {

std::vector<int> order_spectrum(const LoopTable& L) {
  std::vector<int> sp(static_cast<std::size_t>(L.size()));
  for (int x = 0; x < L.size(); ++x) sp[static_cast<std::size_t>(x)] = L.element_order(x);
  return sp;
}

/// Joint exact color refinement.  Colors are assigned from one shared table,
/// so equal colors mean equal refinement history across the two loops.
/// Returns false as soon as the color histograms diverge.
bool joint_refine(const LoopTable& A, const LoopTable& B, std::vector<int>& ca, std::vector<int>& cb) {
  int n = A.size();
  auto histogram = [&](const std::vector<int>& c) {
    std::map<int, int> h;
    for (int v : c) ++h[v];
    return h;
  };

  {
    std::map<int, int> palette;
    std::vector<int> oa = order_spectrum(A), ob = order_spectrum(B);
    ca.assign(static_cast<std::size_t>(n), 0);
    cb.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) ca[static_cast<std::size_t>(x)] = palette.emplace(oa[static_cast<std::size_t>(x)], static_cast<int>(palette.size())).first->second;
    for (int x = 0; x < n; ++x) cb[static_cast<std::size_t>(x)] = palette.emplace(ob[static_cast<std::size_t>(x)], static_cast<int>(palette.size())).first->second;
    if (histogram(ca) != histogram(cb)) return false;
  }

  using Sig = std::pair<int, std::vector<std::tuple<int, int, int>>>;
  for (;;) {
    std::map<Sig, int> palette;
    auto recolor = [&](const LoopTable& L, const std::vector<int>& c, std::vector<int>& out) {
      for (int x = 0; x < n; ++x) {
        Sig sig;
        sig.first = c[static_cast<std::size_t>(x)];
        sig.second.reserve(static_cast<std::size_t>(n));
        for (int y = 0; y < n; ++y)
          sig.second.emplace_back(c[static_cast<std::size_t>(y)], c[static_cast<std::size_t>(L.mul(x, y))],
                                  c[static_cast<std::size_t>(L.mul(y, x))]);
        std::sort(sig.second.begin(), sig.second.end());
        out[static_cast<std::size_t>(x)] = palette.emplace(std::move(sig), static_cast<int>(palette.size())).first->second;
      }
    };
    std::vector<int> na(static_cast<std::size_t>(n)), nb(static_cast<std::size_t>(n));
    recolor(A, ca, na);
    recolor(B, cb, nb);
    if (histogram(na) != histogram(nb)) return false;
    std::map<int, int> old_classes;
    for (int v : ca) ++old_classes[v];
    bool stable = old_classes.size() == histogram(na).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) return true;
  }
}

struct Matcher {
  const LoopTable& A;
  const LoopTable& B;
  std::vector<int> ca, cb;
  std::vector<int> gen_seq;

  /// Force phi over all products of mapped elements; fails on any conflict.
  bool closure(std::vector<int>& phi, std::vector<int>& used, std::vector<int>& mapped, std::size_t from) const {
    for (std::size_t i = from; i < mapped.size(); ++i) {
      int x = mapped[i];
      for (std::size_t j = 0; j <= i; ++j) {
        int m = mapped[j];
        for (auto [p, q] : {std::pair{A.mul(x, m), B.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(m)])},
                            std::pair{A.mul(m, x), B.mul(phi[static_cast<std::size_t>(m)], phi[static_cast<std::size_t>(x)])}}) {
          int cur = phi[static_cast<std::size_t>(p)];
          if (cur == q) continue;
          if (cur >= 0 || used[static_cast<std::size_t>(q)] >= 0) return false;
          if (ca[static_cast<std::size_t>(p)] != cb[static_cast<std::size_t>(q)]) return false;
          phi[static_cast<std::size_t>(p)] = q;
          used[static_cast<std::size_t>(q)] = p;
          mapped.push_back(p);
        }
      }
    }
    return true;
  }

  bool search(std::vector<int>& phi, std::vector<int>& used, std::vector<int>& mapped) const {
    int next = -1;
    for (int g : gen_seq)
      if (phi[static_cast<std::size_t>(g)] < 0) {
        next = g;
        break;
      }
    if (next < 0) return static_cast<int>(mapped.size()) == A.size();

    for (int b = 0; b < B.size(); ++b) {
      if (used[static_cast<std::size_t>(b)] >= 0 || cb[static_cast<std::size_t>(b)] != ca[static_cast<std::size_t>(next)]) continue;
      std::vector<int> phi2 = phi, used2 = used, mapped2 = mapped;
      std::size_t from = mapped2.size();
      phi2[static_cast<std::size_t>(next)] = b;
      used2[static_cast<std::size_t>(b)] = next;
      mapped2.push_back(next);
      if (closure(phi2, used2, mapped2, from) && search(phi2, used2, mapped2)) {
        phi = std::move(phi2);
        used = std::move(used2);
        mapped = std::move(mapped2);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> is_isomorphic(const LoopTable& L1, const LoopTable& L2) {
  int n = L1.size();
  if (n != L2.size()) return std::nullopt;

  {
    std::vector<int> s1 = order_spectrum(L1), s2 = order_spectrum(L2);
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    if (commutant(L1).size() != commutant(L2).size()) return std::nullopt;
    if (nucleus_left(L1).size() != nucleus_left(L2).size()) return std::nullopt;
    if (nucleus_middle(L1).size() != nucleus_middle(L2).size()) return std::nullopt;
    if (nucleus_right(L1).size() != nucleus_right(L2).size()) return std::nullopt;
  }

  Matcher M{L1, L2, {}, {}, {}};
  if (!joint_refine(L1, L2, M.ca, M.cb)) return std::nullopt;

  // Greedy generating sequence: repeatedly adjoin the rarest-colored element
  // outside the generated subloop (ties to the smallest index).
  std::map<int, int> freq;
  for (int v : M.ca) ++freq[v];
  SubloopSet gen = subloop_generated(L1, {});
  while (gen.size() < n) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (gen.contains(x)) continue;
      if (best < 0 || freq[M.ca[static_cast<std::size_t>(x)]] < freq[M.ca[static_cast<std::size_t>(best)]]) best = x;
    }
    M.gen_seq.push_back(best);
    std::vector<int> seed = gen.members;
    seed.push_back(best);
    gen = subloop_generated(L1, seed);
  }

  std::vector<int> phi(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), -1), mapped;
  if (!M.search(phi, used, mapped)) return std::nullopt;

  Perm iso{std::vector<int>(phi)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (iso[L1.mul(x, y)] != L2.mul(iso[x], iso[y]))
        fail(Errc::internal_inconsistency, "isomorphism search returned a non-homomorphism");
  return iso;
}

IsotopyPartition isotopy_classes(const LoopTable& L, int cap) {
  int n = L.size();
  if (n > cap)
    fail(Errc::order_cap_exceeded,
         "isotopy classification capped at order " + std::to_string(cap) + ", got " + std::to_string(n));

  IsotopyPartition part;
  std::vector<LoopTable> rep_tables;
  for (int a = 0; a < n; ++a) {
    LoopTable iso = principal_isotope(L, a);
    bool placed = false;
    for (std::size_t c = 0; c < rep_tables.size(); ++c)
      if (is_isomorphic(iso, rep_tables[c])) {
        part.classes[c].members.push_back(a);
        placed = true;
        break;
      }
    if (!placed) {
      part.classes.push_back(IsotopyClass{a, {a}});
      rep_tables.push_back(std::move(iso));
    }
  }
  return part;
}

}  // namespace loopforge
