#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "loopforge/builtins.hpp"
#include "loopforge/perm_group.hpp"
#include "loopforge/structure.hpp"
#include "test_support.hpp"

using loopforge::Errc;
using loopforge::LoopTable;
using loopforge::PermGroup;
using loopforge::SubloopSet;

namespace {

const LoopTable& table1() {
  static const LoopTable l = loopforge::builtin_table("table1");
  return l;
}

SubloopSet set_of(std::vector<int> v) { return SubloopSet{std::move(v)}; }

}  // namespace

TEST_CASE("multiplication groups of groups are regular-sized") {
  // For a group G, Mlt has order |G|^2/|Z| and RMlt is regular of order |G|.
  LoopTable s3 = loopforge::builtin_table("s3");
  CHECK(loopforge::rmlt(s3).order() == 6);
  CHECK(loopforge::lmlt(s3).order() == 6);
  CHECK(loopforge::mlt(s3).order() == 36);  // trivial center
  CHECK(loopforge::inn(s3).order() == 6);   // Inn(S3) = S3
  LoopTable c6 = loopforge::builtin_table("c6");
  CHECK(loopforge::mlt(c6).order() == 6);
  CHECK(loopforge::inn(c6).is_trivial());
  CHECK(loopforge::rinn(c6).is_trivial());
}

TEST_CASE("multiplication and inner mapping groups of the order-27 table") {
  const LoopTable& l = table1();
  PermGroup m = loopforge::mlt(l);
  CHECK(m.order() == 139968);
  CHECK(loopforge::equal_groups(m, loopforge::lmlt(l)));
  CHECK(loopforge::derived_length(m) == 3);

  PermGroup h = loopforge::inn(l);
  CHECK(h.order() == 5184);
  CHECK(loopforge::equal_groups(h, loopforge::linn(l)));
  CHECK(loopforge::derived_length(h) == 2);

  PermGroup k = loopforge::rmlt(l);
  CHECK(k.order() == 243);
  CHECK(loopforge::derived_length(k) == 2);
  CHECK(loopforge::nilpotency_class(k) == 2);

  PermGroup ri = loopforge::rinn(l);
  CHECK(ri.order() == 9);
  CHECK(loopforge::is_elementary_abelian(ri, 3));

  // The right inner mapping group is the stabilizer of the identity in RMlt,
  // and RMlt sits inside Mlt (not normally: conjugating by left translations
  // escapes it).
  CHECK(loopforge::equal_groups(ri, k.stabilizer(l.identity())));
  for (const loopforge::Perm& p : k.generators()) CHECK(m.contains(p));
  CHECK_FALSE(loopforge::is_normal_subgroup(m, k));
}

TEST_CASE("inner generators land in the inner mapping group") {
  const LoopTable& l = table1();
  loopforge::InnerGenerators ig = loopforge::inner_generators(l);
  CHECK(ig.r.size() == 27 * 27);
  CHECK(ig.t.size() == 27);
  CHECK(ig.l.size() == 27 * 27);
  CHECK(ig.distinct().size() == 79);
  PermGroup h = loopforge::inn(l);
  for (const loopforge::Perm& p : ig.distinct()) {
    CHECK(p[l.identity()] == l.identity());
    CHECK(h.contains(p));
  }
  CHECK(loopforge::equal_groups(PermGroup::from_generators(ig.all()), h));

  // In a group every R_{x,y} is trivial; in an abelian group so is T_x.
  loopforge::InnerGenerators gg =
      loopforge::inner_generators(loopforge::builtin_table("c6"));
  for (const loopforge::Perm& p : gg.all()) CHECK(p.is_identity());
}

TEST_CASE("nuclei of the order-27 tables") {
  for (const char* name : {"table1", "table2"}) {
    LoopTable l = loopforge::builtin_table(name);
    CHECK(loopforge::nucleus_left(l).members == testutil::iota_n(9));
    CHECK(loopforge::nucleus_middle(l).members == std::vector<int>{0});
    CHECK(loopforge::nucleus_right(l).members == std::vector<int>{0});
    CHECK(loopforge::nucleus(l).members == std::vector<int>{0});
    CHECK(loopforge::center_loop(l).members == std::vector<int>{0});
    CHECK(loopforge::commutant(l) == std::vector<int>{0});
  }
  // For a group all four nuclei are everything.
  LoopTable d4 = loopforge::builtin_table("d4");
  CHECK(loopforge::nucleus(d4).size() == 8);
  CHECK(loopforge::center_loop(d4).size() == 2);
}

TEST_CASE("right Bol loops have equal middle and right nuclei") {
  for (const char* name : {"table1", "table2"}) {
    LoopTable l = loopforge::builtin_table(name);
    CHECK(loopforge::nucleus_middle(l).members == loopforge::nucleus_right(l).members);
    CHECK(loopforge::is_normal(l, loopforge::nucleus_right(l)));
  }
}

TEST_CASE("commutant membership matches the table") {
  const LoopTable& l = table1();
  // Elements 2 and 10 (1-based) do not commute: 2*10 = 15 but 10*2 = 11.
  CHECK(l.mul(1, 9) == 14);
  CHECK(l.mul(9, 1) == 10);
  std::vector<int> c2 = loopforge::commutant_of(l, 1);
  CHECK(std::find(c2.begin(), c2.end(), 9) == c2.end());
  for (int y : c2) CHECK(l.mul(1, y) == l.mul(y, 1));

  LoopTable p = loopforge::direct_product(loopforge::builtin_table("c3"),
                                          loopforge::builtin_table("g21"));
  CHECK(loopforge::center_loop(p).members == std::vector<int>{0, 21, 42});
}

TEST_CASE("generated subloops") {
  const LoopTable& l = table1();
  CHECK(loopforge::subloop_generated(l, {}).members == std::vector<int>{0});
  CHECK(loopforge::subloop_generated(l, {1}).members == std::vector<int>{0, 1, 2});
  CHECK(loopforge::subloop_generated(l, {1, 9}).size() == 27);
  SubloopSet n = loopforge::subloop_generated(l, {9});
  CHECK(n.size() == 3);
  CHECK(loopforge::is_subloop(l, n.members));
  CHECK_FALSE(loopforge::is_subloop(l, {0, 1}));       // not closed
  CHECK_FALSE(loopforge::is_subloop(l, {1, 2}));       // missing identity
  CHECK_LOOP_ERROR(loopforge::subloop_generated(l, {99}), Errc::bad_dimensions);
}

TEST_CASE("normality and normal closure") {
  const LoopTable& l = table1();
  SubloopSet nine = set_of(testutil::iota_n(9));
  CHECK(loopforge::is_normal(l, nine));
  SubloopSet three = loopforge::subloop_generated(l, {1});
  CHECK_FALSE(loopforge::is_normal(l, three));
  CHECK(loopforge::normal_closure_loop(l, three).members == nine.members);
  CHECK(loopforge::normal_closure_loop(l, nine).members == nine.members);
  CHECK_LOOP_ERROR(loopforge::is_normal(l, set_of({0, 1})), Errc::not_a_subloop);
}

TEST_CASE("derived and associator subloops") {
  const LoopTable& l = table1();
  CHECK(loopforge::derived_subloop(l).members == testutil::iota_n(9));
  CHECK(loopforge::associator_subloop(l).members == testutil::iota_n(9));
  CHECK(loopforge::derived_subloop(loopforge::builtin_table("table2")).members ==
        testutil::iota_n(9));

  // For groups, the associator subloop is trivial and the derived subloop is
  // the usual commutator subgroup.
  LoopTable s3 = loopforge::builtin_table("s3");
  CHECK(loopforge::associator_subloop(s3).members == std::vector<int>{0});
  CHECK(loopforge::derived_subloop(s3).size() == 3);
  LoopTable a4 = loopforge::builtin_table("a4");
  CHECK(loopforge::derived_subloop(a4).size() == 4);
  CHECK(loopforge::derived_subloop(loopforge::builtin_table("c27")).members ==
        std::vector<int>{0});
}

TEST_CASE("quotients") {
  const LoopTable& l = table1();
  SubloopSet nine = set_of(testutil::iota_n(9));
  LoopTable q = loopforge::quotient(l, nine);
  CHECK(q.size() == 3);
  CHECK(loopforge::is_associative(q));
  CHECK(loopforge::is_commutative(q));

  CHECK(loopforge::quotient(l, set_of({0})) == l);
  CHECK(loopforge::quotient(l, loopforge::subloop_generated(l, {1, 9})).size() == 1);
  // Quotient by a non-normal subloop is rejected.
  CHECK_LOOP_ERROR(loopforge::quotient(l, loopforge::subloop_generated(l, {1})),
                   Errc::not_normal);

  LoopTable sub = loopforge::subtable(l, nine);
  CHECK(sub.size() == 9);
  CHECK(loopforge::is_associative(sub));  // the left nucleus is a group
  CHECK(loopforge::is_commutative(sub));
  CHECK(sub.exponent() == 3);
}

TEST_CASE("the normal subloop lattice") {
  std::vector<SubloopSet> lat = loopforge::all_normal_subloops(table1());
  REQUIRE(lat.size() == 3);
  CHECK(lat[0].size() == 1);
  CHECK(lat[1].members == testutil::iota_n(9));
  CHECK(lat[2].size() == 27);

  CHECK(loopforge::all_normal_subloops(loopforge::builtin_table("c6")).size() == 4);
  CHECK(loopforge::all_normal_subloops(loopforge::builtin_table("s3")).size() == 3);
  CHECK(loopforge::all_normal_subloops(loopforge::builtin_table("a4")).size() == 3);
  CHECK(loopforge::all_normal_subloops(loopforge::builtin_table("c5")).size() == 2);

  CHECK(loopforge::is_simple(loopforge::builtin_table("c5")));
  CHECK_FALSE(loopforge::is_simple(table1()));
  CHECK_FALSE(loopforge::is_simple(loopforge::builtin_table("s3")));

  // Products of normal subloops are again (normal) subloops: check the two
  // proper ones in the order-27 lattice pairwise.
  const LoopTable& l = table1();
  for (const SubloopSet& a : lat) {
    for (const SubloopSet& b : lat) {
      std::vector<int> prod;
      for (int x : a.members)
        for (int y : b.members) prod.push_back(l.mul(x, y));
      std::sort(prod.begin(), prod.end());
      prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
      CHECK(loopforge::is_subloop(l, prod));
    }
  }
}

TEST_CASE("solvability and central nilpotence") {
  CHECK(loopforge::is_solvable(table1()));
  CHECK_FALSE(loopforge::is_centrally_nilpotent(table1()));
  std::vector<SubloopSet> ucs = loopforge::upper_central_series(table1());
  REQUIRE(ucs.size() == 1);  // the series stalls at the trivial center
  CHECK(ucs[0].size() == 1);

  LoopTable h = loopforge::builtin_table("heis27");
  CHECK(loopforge::is_centrally_nilpotent(h));
  std::vector<SubloopSet> hs = loopforge::upper_central_series(h);
  REQUIRE(hs.size() == 3);
  CHECK(hs[0].size() == 1);
  CHECK(hs[1].size() == 3);
  CHECK(hs[2].size() == 27);

  CHECK(loopforge::is_solvable(loopforge::builtin_table("s3")));
  CHECK_FALSE(loopforge::is_centrally_nilpotent(loopforge::builtin_table("s3")));
  CHECK(loopforge::is_centrally_nilpotent(loopforge::builtin_table("d4")));
}

TEST_CASE("automorphism recognition") {
  const LoopTable& l = table1();
  CHECK(loopforge::is_automorphism(l, loopforge::Perm(27)));
  // Inner mappings of a loop need not be automorphisms, but R_{x,y} of this
  // table fixes the subloop structure; just probe a couple of known maps.
  LoopTable c4 = loopforge::builtin_table("c4");
  CHECK(loopforge::is_automorphism(c4, loopforge::Perm({0, 3, 2, 1})));   // inversion
  CHECK_FALSE(loopforge::is_automorphism(c4, loopforge::Perm({0, 2, 1, 3})));
  CHECK_FALSE(loopforge::is_automorphism(c4, loopforge::Perm({1, 0, 3, 2})));
}
