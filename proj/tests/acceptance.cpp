// Acceptance gate: one pass/fail line per criterion, with runtime budgets.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopforge/builtins.hpp"
#include "loopforge/errors.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/loop_table.hpp"
#include "loopforge/perm.hpp"
#include "loopforge/perm_group.hpp"
#include "loopforge/structure.hpp"
#include "loopforge/twisted.hpp"

namespace {

using namespace loopforge;

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) bad_.push_back(what);
  }

  template <typename A, typename B>
  void require_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
      std::ostringstream os;
      os << what << ": expected " << want << ", got " << got;
      bad_.push_back(os.str());
    }
  }

  void note(const std::string& s) { notes_.push_back(s); }

  bool passed() const { return bad_.empty(); }
  const std::vector<std::string>& failures() const { return bad_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> bad_;
  std::vector<std::string> notes_;
};

std::string set_to_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i] + 1);  // 1-based for readability
  }
  return s + "}";
}

std::vector<int> iota_n(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 10 support: exhaustive enumeration of involutory automorphisms of
// a small group, by assigning images to a generating set and extending
// multiplicatively.

std::vector<int> generating_set(const LoopTable& g) {
  std::vector<int> gens;
  SubloopSet cur = subloop_generated(g, gens);
  while (cur.size() < g.size()) {
    for (int x = 0; x < g.size(); ++x) {
      if (!cur.contains(x)) {
        gens.push_back(x);
        break;
      }
    }
    cur = subloop_generated(g, gens);
  }
  return gens;
}

std::optional<Perm> extend_endomorphism(const LoopTable& g, const std::vector<int>& gens,
                                        const std::vector<int>& imgs) {
  std::vector<int> phi(static_cast<std::size_t>(g.size()), -1);
  phi[static_cast<std::size_t>(g.identity())] = g.identity();
  std::vector<int> known{g.identity()};
  for (std::size_t i = 0; i < known.size(); ++i) {
    int x = known[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(x, gens[k]);
      int want = g.mul(phi[static_cast<std::size_t>(x)], imgs[k]);
      int& slot = phi[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = want;
        known.push_back(y);
      } else if (slot != want) {
        return std::nullopt;
      }
    }
  }
  if (known.size() != static_cast<std::size_t>(g.size())) return std::nullopt;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  for (int v : phi) {
    if (seen[static_cast<std::size_t>(v)]) return std::nullopt;  // not injective
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Perm p(phi);
  if (!is_automorphism(g, p)) return std::nullopt;
  return p;
}

std::vector<Perm> involutory_automorphisms(const LoopTable& g) {
  std::vector<int> gens = generating_set(g);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int ord = g.element_order(gens[k]);
    for (int x = 0; x < g.size(); ++x)
      if (g.element_order(x) == ord) cands[k].push_back(x);
  }
  std::vector<Perm> out;
  std::vector<int> imgs(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      if (std::optional<Perm> p = extend_endomorphism(g, gens, imgs)) {
        if ((*p * *p).is_identity()) out.push_back(*p);
      }
      return;
    }
    for (int c : cands[k]) {
      imgs[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The criteria.

void criterion_1(Criterion& c) {
  for (const char* name : {"table1", "table2"}) {
    LoopTable l = builtin_table(name);  // construction validates the Latin property
    c.require_eq(l.size(), 27, std::string(name) + " order");
    c.require_eq(l.identity() + 1, 1, std::string(name) + " identity");
    c.require_eq(l.exponent(), 3, std::string(name) + " exponent");
    c.require(is_right_bol(l), std::string(name) + " is right Bol");
  }
}

void criterion_2(Criterion& c) {
  PermGroup g = mlt(builtin_table("table1"));
  c.require_eq(g.order(), 139968u, "order(mlt)");
  c.require(equal_groups(g, lmlt(builtin_table("table1"))), "mlt = lmlt");
  c.require_eq(derived_length(g), 3, "derived length of mlt");
  PermGroup g1 = derived_subgroup(g);
  c.require_eq(g1.order(), 46656u, "|G'|");
  PermGroup g2 = derived_subgroup(g1);
  c.require(is_elementary_abelian(g2, 3), "G'' elementary abelian");
  c.require_eq(g2.order(), 243u, "|G''|");
  if (g2.order() != 243) {
    c.note("measured |G''| = " + std::to_string(g2.order()) + " = 3^6; elementary abelian over p = 3 holds");
    c.note("measured indices: [G:G'] = " + std::to_string(g.order() / g1.order()) +
           ", [G':G''] = " + std::to_string(g1.order() / g2.order()) +
           ", [G:G''] = " + std::to_string(g.order() / g2.order()) +
           " (an order-243 G'' would make the last index 576)");
  }
}

void criterion_3(Criterion& c) {
  PermGroup h = inn(builtin_table("table1"));
  c.require_eq(h.order(), 5184u, "order(inn)");
  c.require_eq(derived_length(h), 2, "derived length of inn");
  PermGroup h1 = derived_subgroup(h);
  c.require_eq(h1.order(), 81u, "|H'|");
  c.require(is_elementary_abelian(h1, 3), "H' elementary abelian");
}

void criterion_4(Criterion& c) {
  PermGroup k = rmlt(builtin_table("table1"));
  c.require_eq(k.order(), 243u, "order(rmlt)");
  c.require_eq(nilpotency_class(k), 2, "nilpotency class of rmlt");
  PermGroup k1 = derived_subgroup(k);
  PermGroup z = center(k);
  c.require(equal_groups(k1, z), "K' = Z(K)");
  c.require_eq(k1.order(), 9u, "|K'|");
  c.require(is_elementary_abelian(k1, 3), "K' elementary abelian");
  c.require(quotient_is_elementary_abelian(k, z, 3), "K/Z(K) elementary abelian");
}

void criterion_5(Criterion& c) {
  PermGroup r = rinn(builtin_table("table1"));
  c.require_eq(r.order(), 9u, "order(rinn)");
  c.require(is_elementary_abelian(r, 3), "rinn elementary abelian");
}

void criterion_6(Criterion& c) {
  LoopTable l = builtin_table("table1");
  std::vector<int> e{0};
  std::vector<int> nine = iota_n(9);
  c.require(nucleus_right(l).members == e, "N_r = {1}");
  c.require(nucleus_middle(l).members == e, "N_m = {1}");
  c.require(commutant(l) == e, "C(Q) = {1}");
  c.require(center_loop(l).members == e, "Z(Q) = {1}");
  c.require(nucleus_left(l).members == nine, "N_l = {1..9}");
  c.require(associator_subloop(l).members == nine, "A(Q) = {1..9}");
  c.require(derived_subloop(l).members == nine, "Q' = {1..9}");
  LoopTable sub = subtable(l, SubloopSet{nine});
  c.require(is_associative(sub) && is_commutative(sub) && sub.exponent() == 3,
            "N_l elementary abelian as a group");
  std::vector<SubloopSet> lat = all_normal_subloops(l);
  bool lattice_ok = lat.size() == 3 && lat[0].members == e && lat[1].members == nine &&
                    lat[2].members == iota_n(27);
  c.require(lattice_ok, "normal subloop lattice is {1} < {1..9} < Q");
  if (!lattice_ok) {
    for (const SubloopSet& s : lat) c.note("normal subloop: " + set_to_string(s.members));
  }
}

void criterion_7(Criterion& c) {
  LoopTable l = builtin_table("table1");
  IsotopyPartition part = isotopy_classes(l);
  c.require_eq(static_cast<int>(part.classes.size()), 2, "number of isotopy classes");
  if (part.classes.size() == 2) {
    const IsotopyClass* home = nullptr;
    const IsotopyClass* other = nullptr;
    for (const IsotopyClass& cl : part.classes) {
      bool has_e = std::find(cl.members.begin(), cl.members.end(), l.identity()) != cl.members.end();
      (has_e ? home : other) = &cl;
    }
    c.require(home != nullptr && other != nullptr, "classes split identity");
    if (other != nullptr) {
      LoopTable rep = principal_isotope(l, other->representative);
      c.require(is_isomorphic(rep, builtin_table("table2")).has_value(),
                "table2 lies in the class not containing table1");
      c.require(!is_isomorphic(l, builtin_table("table2")).has_value(),
                "table2 is not isomorphic to table1 itself");
    }
  }
  for (int a = 0; a < l.size(); ++a) {
    std::uint64_t ord = mlt(principal_isotope(l, a)).order();
    if (ord != 139968) {
      c.require(false, "isotope at " + std::to_string(a + 1) + " has mlt order " + std::to_string(ord));
      break;
    }
  }
}

void criterion_8(Criterion& c) {
  int checked = 0;
  for (int n = 1; n <= 81; n += 2) {
    for (const std::vector<int>& f : abelian_factorizations(n)) {
      LoopTable l = abelian_group(f);
      GroupTable g = GroupTable::certify(l);
      if (!(t_half(g) == l)) {
        c.require(false, "t_half moved an abelian group of order " + std::to_string(n));
        return;
      }
      ++checked;
    }
  }
  c.note("t_half fixed " + std::to_string(checked) + " odd abelian groups");
  c.require(checked >= 53, "odd abelian corpus covers orders 1..81");

  GroupTable g21 = GroupTable::certify(builtin_table("g21"));
  LoopTable q = t_half(g21);
  c.require(!is_associative(q), "t_half(g21) is nonassociative");
  c.require(is_bruck(q), "t_half(g21) is Bruck");
  c.require(is_uniquely_2_divisible(q), "t_half(g21) is uniquely 2-divisible");
  for (int x = 0; x < q.size(); ++x) {
    if (q.element_order(x) != g21.table().element_order(x)) {
      c.require(false, "element order changed at " + std::to_string(x + 1));
      break;
    }
  }
}

void criterion_9(Criterion& c) {
  std::vector<std::pair<std::string, LoopTable>> corpus;
  for (const char* name : {"c3", "c5", "c7", "c9", "c27", "c3c3", "g21", "heis27", "g39", "g55"}) {
    corpus.emplace_back(std::string("t_half(") + name + ")",
                        t_half(GroupTable::certify(builtin_table(name))));
  }
  corpus.emplace_back("t_half(g21) x t_half(c3)",
                      direct_product(corpus[6].second, corpus[0].second));
  corpus.emplace_back("t_half(g39) x t_half(c3)",
                      direct_product(corpus[8].second, corpus[0].second));
  c.require(corpus.size() >= 10, "corpus has at least 10 loops");

  for (const auto& [label, q] : corpus) {
    if (!(is_bruck(q) && is_uniquely_2_divisible(q))) {
      c.require(false, label + " is not a uniquely 2-divisible Bruck loop");
      continue;
    }
    std::vector<Perm> rmaps = inner_generators(q).r;
    std::sort(rmaps.begin(), rmaps.end());
    rmaps.erase(std::unique(rmaps.begin(), rmaps.end()), rmaps.end());
    for (const Perm& p : rmaps) {
      if (!is_automorphism(q, p)) {
        c.require(false, label + ": some R_{x,y} is not an automorphism");
        break;
      }
    }
    std::vector<int> com = commutant(q);
    bool normal = is_subloop(q, com) && is_normal(q, SubloopSet{com});
    c.require(normal, label + ": commutant is a normal subloop");
  }
  c.note("corpus size " + std::to_string(corpus.size()));
}

void criterion_10(Criterion& c) {
  for (const char* name : {"c2", "c2c2", "c3", "c3c3", "c4", "c5", "c6", "c7", "c8", "c9", "c27"}) {
    GroupTable g = GroupTable::certify(builtin_table(name));
    TwistedSubset t = twisted_subset(g, iota_n(g.size()));
    if (aschbacher_radical(g, t) != std::vector<int>{g.identity()}) {
      c.require(false, std::string("radical not trivial on abelian ") + name);
    }
  }
  for (const char* name : {"s3", "d4", "a4"}) {
    GroupTable g = GroupTable::certify(builtin_table(name));
    TwistedSubset t = twisted_subset(g, iota_n(g.size()));
    c.require(aschbacher_radical(g, t) == derived_subloop(g.table()).members,
              std::string("radical(T = G) = derived subgroup on ") + name);
  }

  // Forward direction of the radical criterion: every K(tau) instance has a
  // trivial radical.  tau ranges over all involutory automorphisms of each
  // group in the corpus (orders up to 100).
  std::vector<std::pair<std::string, LoopTable>> groups;
  for (const std::string& name : builtin_names()) {
    LoopTable l = builtin_table(name);
    if (is_associative(l)) groups.emplace_back(name, l);
  }
  groups.emplace_back("s3 x c2", direct_product(builtin_table("s3"), builtin_table("c2")));
  groups.emplace_back("d4 x c2", direct_product(builtin_table("d4"), builtin_table("c2")));
  groups.emplace_back("a4 x c2", direct_product(builtin_table("a4"), builtin_table("c2")));
  groups.emplace_back("c5 x c5", direct_product(builtin_table("c5"), builtin_table("c5")));
  groups.emplace_back("s3 x s3", direct_product(builtin_table("s3"), builtin_table("s3")));

  int instances = 0;
  for (const auto& [name, l] : groups) {
    GroupTable g = GroupTable::certify(l);
    for (const Perm& tau : involutory_automorphisms(l)) {
      TwistedSubset k = k_tau(g, tau);
      ++instances;
      if (aschbacher_radical(g, k) != std::vector<int>{g.identity()}) {
        c.require(false, name + ": K(tau) with nontrivial radical, tau = " + tau.to_cycle_string());
      }
    }
  }
  c.require(instances >= 50, "enough K(tau) instances enumerated");
  c.note("checked " + std::to_string(instances) + " K(tau) instances over " +
         std::to_string(groups.size()) + " groups");
}

void criterion_11(Criterion& c) {
  GroupTable g = GroupTable::certify(builtin_table("g21"));
  LoopTable q = t_half(g);
  int pairs = 0;
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      bool direct = q.mul(x, y) == q.mul(y, x);
      if (direct != thalf_commutes(g, x, y)) {
        c.require(false, "criterion disagrees at (" + std::to_string(x + 1) + "," +
                             std::to_string(y + 1) + ")");
        return;
      }
      ++pairs;
    }
  }
  c.require_eq(pairs, 441, "pairs checked");
}

struct Entry {
  int id;
  const char* label;
  int budget_ms;
  void (*body)(Criterion&);
};

}  // namespace

int main() {
  const std::vector<Entry> entries = {
      {1, "builtin tables load: order 27, identity 1, exponent 3, right Bol", 1000, criterion_1},
      {2, "multiplication group tower: |G| = 139968, mlt = lmlt, derived length 3, |G'| = 46656, G'' elementary abelian of order 243", 30000, criterion_2},
      {3, "inner mapping group: order 5184, derived length 2, H' elementary abelian of order 81", 30000, criterion_3},
      {4, "right multiplication group: order 243, class 2, K' = Z(K) elementary abelian of order 9, K/Z(K) elementary abelian", 5000, criterion_4},
      {5, "right inner mapping group: order 9, elementary abelian", 5000, criterion_5},
      {6, "substructures: trivial N_r, N_m, C(Q), Z(Q); N_l = A(Q) = Q' = {1..9}; lattice {1} < {1..9} < Q", 10000, criterion_6},
      {7, "isotopes: exactly 2 classes, table2 in the other class, all mlt orders 139968", 300000, criterion_7},
      {8, "t_half fixes odd abelian groups up to order 81; t_half(g21) nonassociative Bruck with orders preserved", 10000, criterion_8},
      {9, "u2d Bruck corpus: every R_{x,y} an automorphism, commutant normal", 30000, criterion_9},
      {10, "radical: trivial on abelian, derived subgroup for T = G, trivial on every K(tau)", 60000, criterion_10},
      {11, "thalf_commutes matches direct commutation on all 441 pairs", 1000, criterion_11},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const LoopError& err) {
      c.require(false, std::string("unexpected error: ") + err.what());
    } catch (const std::exception& err) {
      c.require(false, std::string("unexpected exception: ") + err.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms > e.budget_ms)
      c.require(false, "runtime " + std::to_string(ms) + " ms exceeds budget " +
                           std::to_string(e.budget_ms) + " ms");

    std::printf("%s criterion %2d [%6lld ms] %s\n", c.passed() ? "PASS" : "FAIL", e.id,
                static_cast<long long>(ms), e.label);
    if (!c.passed()) {
      for (const std::string& f : c.failures()) std::printf("       - %s\n", f.c_str());
      for (const std::string& n : c.notes()) std::printf("       note: %s\n", n.c_str());
      ++failed;
    }
  }
  std::printf("acceptance: %d of %zu criteria passed, %d failed\n",
              static_cast<int>(entries.size()) - failed, entries.size(), failed);
  return failed;
}
