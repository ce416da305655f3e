#include "loopforge/structure.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>

#include "loopforge/errors.hpp"

namespace loopforge {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_subloop(const LoopTable& L, const SubloopSet& S, const char* what) {
  if (!is_subloop(L, S.members))
    fail(Errc::not_a_subloop, std::string(what) + ": member set is not a subloop");
}

SubloopSet as_subloop(const LoopTable& L, std::vector<int> members, const char* what) {
  SubloopSet S{sorted_unique(std::move(members))};
  if (!is_subloop(L, S.members))
    fail(Errc::internal_inconsistency, std::string(what) + " failed to close into a subloop");
  return S;
}

/// Multiplicative closure of seed ∪ {e} via a pair worklist.
std::vector<int> close_under_mul(const LoopTable& L, const std::vector<int>& seed) {
  int n = L.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> mem;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      mem.push_back(x);
    }
  };
  add(L.identity());
  for (int s : seed) add(s);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.mul(mem[i], mem[j]));
      add(L.mul(mem[j], mem[i]));
    }
  std::sort(mem.begin(), mem.end());
  return mem;
}

std::vector<Perm> translation_generators(const LoopTable& L, bool right, bool left) {
  std::vector<Perm> gens;
  for (int x = 0; x < L.size(); ++x) {
    if (right) gens.push_back(L.right_translation(x));
    if (left) gens.push_back(L.left_translation(x));
  }
  return gens;
}

}  // namespace

bool SubloopSet::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

PermGroup mlt(const LoopTable& L) { return PermGroup::from_generators(translation_generators(L, true, true)); }
PermGroup rmlt(const LoopTable& L) { return PermGroup::from_generators(translation_generators(L, true, false)); }
PermGroup lmlt(const LoopTable& L) { return PermGroup::from_generators(translation_generators(L, false, true)); }

PermGroup inn(const LoopTable& L) { return mlt(L).stabilizer(L.identity()); }
PermGroup rinn(const LoopTable& L) { return rmlt(L).stabilizer(L.identity()); }
PermGroup linn(const LoopTable& L) { return lmlt(L).stabilizer(L.identity()); }

InnerGenerators inner_generators(const LoopTable& L) {
  int n = L.size();
  InnerGenerators ig;
  ig.r.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  ig.t.reserve(static_cast<std::size_t>(n));
  ig.l.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

  std::vector<Perm> rt(static_cast<std::size_t>(n)), lt(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    rt[static_cast<std::size_t>(x)] = L.right_translation(x);
    lt[static_cast<std::size_t>(x)] = L.left_translation(x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ig.r.push_back(rt[static_cast<std::size_t>(x)] * rt[static_cast<std::size_t>(y)] *
                     rt[static_cast<std::size_t>(L.mul(x, y))].inverse());
  for (int x = 0; x < n; ++x)
    ig.t.push_back(rt[static_cast<std::size_t>(x)] * lt[static_cast<std::size_t>(x)].inverse());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ig.l.push_back(lt[static_cast<std::size_t>(x)] * lt[static_cast<std::size_t>(y)] *
                     lt[static_cast<std::size_t>(L.mul(y, x))].inverse());

  int e = L.identity();
  for (const auto* bucket : {&ig.r, &ig.t, &ig.l})
    for (const Perm& p : *bucket)
      if (p[e] != e) fail(Errc::internal_inconsistency, "inner generator moves the identity");
  return ig;
}

std::vector<Perm> InnerGenerators::all() const {
  std::vector<Perm> out;
  out.reserve(r.size() + t.size() + l.size());
  out.insert(out.end(), r.begin(), r.end());
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::vector<Perm> InnerGenerators::distinct() const {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& p : all())
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

SubloopSet nucleus_left(const LoopTable& L) {
  int n = L.size();
  std::vector<int> mem;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = L.mul(L.mul(a, x), y) == L.mul(a, L.mul(x, y));
    if (ok) mem.push_back(a);
  }
  return as_subloop(L, std::move(mem), "nucleus_left");
}

SubloopSet nucleus_middle(const LoopTable& L) {
  int n = L.size();
  std::vector<int> mem;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = L.mul(L.mul(x, a), y) == L.mul(x, L.mul(a, y));
    if (ok) mem.push_back(a);
  }
  return as_subloop(L, std::move(mem), "nucleus_middle");
}

SubloopSet nucleus_right(const LoopTable& L) {
  int n = L.size();
  std::vector<int> mem;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = L.mul(L.mul(x, y), a) == L.mul(x, L.mul(y, a));
    if (ok) mem.push_back(a);
  }
  return as_subloop(L, std::move(mem), "nucleus_right");
}

SubloopSet nucleus(const LoopTable& L) {
  SubloopSet nl = nucleus_left(L), nm = nucleus_middle(L), nr = nucleus_right(L);
  std::vector<int> mem;
  for (int a : nl.members)
    if (nm.contains(a) && nr.contains(a)) mem.push_back(a);
  return as_subloop(L, std::move(mem), "nucleus");
}

std::vector<int> commutant_of(const LoopTable& L, int x) {
  if (x < 0 || x >= L.size()) fail(Errc::bad_dimensions, "element out of range");
  std::vector<int> out;
  for (int a = 0; a < L.size(); ++a)
    if (L.mul(a, x) == L.mul(x, a)) out.push_back(a);
  return out;
}

std::vector<int> commutant(const LoopTable& L) {
  std::vector<int> out;
  for (int a = 0; a < L.size(); ++a) {
    bool ok = true;
    for (int x = 0; x < L.size() && ok; ++x) ok = L.mul(a, x) == L.mul(x, a);
    if (ok) out.push_back(a);
  }
  return out;
}

SubloopSet center_loop(const LoopTable& L) {
  SubloopSet nuc = nucleus(L);
  std::vector<int> com = commutant(L);
  std::vector<int> via_sets;
  for (int a : com)
    if (nuc.contains(a)) via_sets.push_back(a);

  std::vector<int> via_fix;
  std::vector<Perm> gens = inner_generators(L).distinct();
  for (int a = 0; a < L.size(); ++a) {
    bool fixed = true;
    for (const Perm& g : gens)
      if (g[a] != a) {
        fixed = false;
        break;
      }
    if (fixed) via_fix.push_back(a);
  }
  if (via_sets != via_fix)
    fail(Errc::internal_inconsistency, "center: N∩C disagrees with the Inn fixed-point set");
  return as_subloop(L, std::move(via_sets), "center");
}

bool is_subloop(const LoopTable& L, const std::vector<int>& members) {
  int n = L.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int m : members) {
    if (m < 0 || m >= n) return false;
    in[static_cast<std::size_t>(m)] = 1;
  }
  if (!in[static_cast<std::size_t>(L.identity())]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[static_cast<std::size_t>(L.mul(a, b))]) return false;
  return true;
}

SubloopSet subloop_generated(const LoopTable& L, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= L.size()) fail(Errc::bad_dimensions, "generator out of range");
  return SubloopSet{close_under_mul(L, seed)};
}

bool is_normal(const LoopTable& L, const SubloopSet& S) {
  check_subloop(L, S, "is_normal");
  std::vector<char> in(static_cast<std::size_t>(L.size()), 0);
  for (int m : S.members) in[static_cast<std::size_t>(m)] = 1;
  for (const Perm& g : inner_generators(L).distinct())
    for (int m : S.members)
      if (!in[static_cast<std::size_t>(g[m])]) return false;
  return true;
}

SubloopSet normal_closure_loop(const LoopTable& L, const SubloopSet& S) {
  check_subloop(L, S, "normal_closure_loop");
  std::vector<Perm> gens = inner_generators(L).distinct();
  std::vector<int> mem = S.members;
  for (;;) {
    std::vector<int> next = mem;
    for (const Perm& g : gens)
      for (int m : mem) next.push_back(g[m]);
    next = close_under_mul(L, next);
    if (next == mem) return SubloopSet{std::move(mem)};
    mem = std::move(next);
  }
}

namespace {

/// Shared engine for Q' and A(Q): normal closure of a seed, the quotient
/// property re-checked, and (at desk scale) minimality certified against the
/// lattice: the result must sit inside every normal subloop whose quotient
/// has the property.
SubloopSet certified_closure(const LoopTable& L, const std::vector<int>& seed, bool want_abelian,
                             const char* what) {
  SubloopSet C = normal_closure_loop(L, subloop_generated(L, seed));
  LoopTable Qbar = quotient(L, C);
  if (!is_associative(Qbar) || (want_abelian && !is_commutative(Qbar)))
    fail(Errc::internal_inconsistency, std::string(what) + ": quotient lacks the defining property");
  if (L.size() <= 128) {
    for (const SubloopSet& N : all_normal_subloops(L)) {
      LoopTable QN = quotient(L, N);
      if (is_associative(QN) && (!want_abelian || is_commutative(QN)))
        for (int m : C.members)
          if (!N.contains(m))
            fail(Errc::internal_inconsistency, std::string(what) + ": closure is not minimal");
    }
  }
  return C;
}

}  // namespace

SubloopSet derived_subloop(const LoopTable& L) {
  int n = L.size();
  std::vector<int> seed;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      seed.push_back(L.ldiv(L.mul(y, x), L.mul(x, y)));  // (yx) c = xy
      for (int z = 0; z < n; ++z)
        seed.push_back(L.ldiv(L.mul(x, L.mul(y, z)), L.mul(L.mul(x, y), z)));
    }
  return certified_closure(L, sorted_unique(std::move(seed)), true, "derived_subloop");
}

SubloopSet associator_subloop(const LoopTable& L) {
  int n = L.size();
  std::vector<int> seed;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        seed.push_back(L.ldiv(L.mul(x, L.mul(y, z)), L.mul(L.mul(x, y), z)));  // (x(yz)) a = (xy)z
  return certified_closure(L, sorted_unique(std::move(seed)), false, "associator_subloop");
}

LoopTable quotient(const LoopTable& L, const SubloopSet& N) {
  check_subloop(L, N, "quotient");
  if (!is_normal(L, N)) fail(Errc::not_normal, "quotient by a non-normal subloop");

  int n = L.size();
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : N.members) {
      int y = L.mul(m, x);
      if (coset_of[static_cast<std::size_t>(y)] >= 0)
        fail(Errc::ill_defined, "cosets overlap at element " + std::to_string(y + 1));
      coset_of[static_cast<std::size_t>(y)] = id;
    }
  }

  int q = static_cast<int>(reps.size());
  std::vector<int> cells(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = coset_of[static_cast<std::size_t>(x)], cy = coset_of[static_cast<std::size_t>(y)];
      int cz = coset_of[static_cast<std::size_t>(L.mul(x, y))];
      int& cell = cells[static_cast<std::size_t>(cx) * static_cast<std::size_t>(q) + static_cast<std::size_t>(cy)];
      if (cell < 0)
        cell = cz;
      else if (cell != cz)
        fail(Errc::ill_defined, "coset product is not well defined");
    }
  return LoopTable::from_cells(q, std::move(cells));
}

LoopTable subtable(const LoopTable& L, const SubloopSet& S) {
  check_subloop(L, S, "subtable");
  int k = S.size();
  std::vector<int> pos(static_cast<std::size_t>(L.size()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(S.members[static_cast<std::size_t>(i)])] = i;
  std::vector<int> cells(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(L.mul(S.members[static_cast<std::size_t>(i)],
                                             S.members[static_cast<std::size_t>(j)]))];
  return LoopTable::from_cells(k, std::move(cells));
}

std::vector<SubloopSet> all_normal_subloops(const LoopTable& L, int cap) {
  int n = L.size();
  if (n > cap)
    fail(Errc::order_cap_exceeded,
         "normal subloop lattice capped at order " + std::to_string(cap) + ", got " + std::to_string(n));

  std::vector<SubloopSet> lattice;
  auto add = [&](SubloopSet S) {
    if (std::find(lattice.begin(), lattice.end(), S) == lattice.end()) {
      lattice.push_back(std::move(S));
      return true;
    }
    return false;
  };
  add(SubloopSet{{L.identity()}});
  for (int x = 0; x < n; ++x) add(normal_closure_loop(L, subloop_generated(L, {x})));

  // Join-closure: every normal subloop is a join of singleton closures.  The
  // lattice vector grows while we iterate, so each unordered pair (old or
  // newly added) is joined exactly once.
  for (std::size_t i = 1; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<int> both = lattice[i].members;
      both.insert(both.end(), lattice[j].members.begin(), lattice[j].members.end());
      add(normal_closure_loop(L, subloop_generated(L, both)));
    }
  std::sort(lattice.begin(), lattice.end(), [](const SubloopSet& a, const SubloopSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return lattice;
}

bool is_simple(const LoopTable& L) { return all_normal_subloops(L).size() == 2; }

bool is_solvable(const LoopTable& L) {
  LoopTable cur = L;
  while (cur.size() > 1) {
    SubloopSet D = derived_subloop(cur);
    if (D.size() == cur.size()) return false;
    cur = subtable(cur, D);
  }
  return true;
}

std::vector<SubloopSet> upper_central_series(const LoopTable& L) {
  std::vector<SubloopSet> series{SubloopSet{{L.identity()}}};
  for (;;) {
    const SubloopSet& Z = series.back();
    LoopTable Qbar = quotient(L, Z);
    // Rebuild the coset labeling the same way quotient() does.
    std::vector<int> coset_of(static_cast<std::size_t>(L.size()), -1);
    int next_id = 0;
    for (int x = 0; x < L.size(); ++x) {
      if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
      for (int m : Z.members) coset_of[static_cast<std::size_t>(L.mul(m, x))] = next_id;
      ++next_id;
    }
    SubloopSet Zq = center_loop(Qbar);
    std::vector<int> lifted;
    for (int x = 0; x < L.size(); ++x)
      if (Zq.contains(coset_of[static_cast<std::size_t>(x)])) lifted.push_back(x);
    SubloopSet Znext = as_subloop(L, std::move(lifted), "upper_central_series");
    if (Znext == Z) return series;
    series.push_back(std::move(Znext));
  }
}

bool is_centrally_nilpotent(const LoopTable& L) {
  return upper_central_series(L).back().size() == L.size();
}

bool is_automorphism(const LoopTable& L, const Perm& p) {
  int n = L.size();
  if (p.degree() != n) fail(Errc::degree_mismatch, "permutation degree differs from loop order");
  if (p[L.identity()] != L.identity()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p[L.mul(x, y)] != L.mul(p[x], p[y])) return false;
  return true;
}

}  // namespace loopforge
