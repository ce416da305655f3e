#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "loopforge/builtins.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/perm_group.hpp"
#include "loopforge/structure.hpp"
#include "test_support.hpp"

using loopforge::Errc;
using loopforge::LoopTable;
using loopforge::Perm;

namespace {

// Checks that phi is an isomorphism from a onto b.
void check_isomorphism(const LoopTable& a, const LoopTable& b, const Perm& phi) {
  REQUIRE(a.size() == b.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      CHECK(phi[a.mul(x, y)] == b.mul(phi[x], phi[y]));
}

}  // namespace

TEST_CASE("the identity isotope is the loop itself") {
  LoopTable l = loopforge::builtin_table("table1");
  CHECK(loopforge::principal_isotope(l, l.identity()) == l);
}

TEST_CASE("all principal isotopes of a group coincide with the group") {
  for (const char* name : {"c6", "s3", "d4", "g21"}) {
    LoopTable g = loopforge::builtin_table(name);
    for (int a = 0; a < g.size(); ++a)
      CHECK(loopforge::principal_isotope(g, a) == g);
  }
}

TEST_CASE("isotopes of a right Bol loop are right Bol with conjugate groups") {
  LoopTable l = loopforge::builtin_table("table1");
  std::uint64_t base_order = loopforge::mlt(l).order();
  for (int a = 0; a < l.size(); ++a) {
    LoopTable iso = loopforge::principal_isotope(l, a);
    CHECK(iso.identity() == l.identity());
    CHECK(loopforge::is_right_bol(iso));
    CHECK(loopforge::mlt(iso).order() == base_order);
  }
}

TEST_CASE("isomorphism finds explicit witnesses") {
  LoopTable l = loopforge::builtin_table("table1");
  std::optional<Perm> self = loopforge::is_isomorphic(l, l);
  REQUIRE(self.has_value());
  check_isomorphism(l, l, *self);

  LoopTable c6 = loopforge::builtin_table("c6");
  LoopTable p = loopforge::direct_product(loopforge::builtin_table("c2"),
                                          loopforge::builtin_table("c3"));
  std::optional<Perm> phi = loopforge::is_isomorphic(p, c6);
  REQUIRE(phi.has_value());
  check_isomorphism(p, c6, *phi);
  std::optional<Perm> psi = loopforge::is_isomorphic(c6, p);
  REQUIRE(psi.has_value());
  check_isomorphism(c6, p, *psi);
}

TEST_CASE("isomorphism rejects structurally different loops") {
  CHECK_FALSE(loopforge::is_isomorphic(loopforge::builtin_table("c4"),
                                       loopforge::builtin_table("c2c2"))
                  .has_value());
  CHECK_FALSE(loopforge::is_isomorphic(loopforge::builtin_table("table1"),
                                       loopforge::builtin_table("table2"))
                  .has_value());
  CHECK_FALSE(loopforge::is_isomorphic(loopforge::builtin_table("c6"),
                                       loopforge::builtin_table("s3"))
                  .has_value());
  CHECK_FALSE(loopforge::is_isomorphic(loopforge::builtin_table("table1"),
                                       loopforge::builtin_table("c27"))
                  .has_value());
  // Size mismatch is an immediate no.
  CHECK_FALSE(loopforge::is_isomorphic(loopforge::builtin_table("c2"),
                                       loopforge::builtin_table("c3"))
                  .has_value());
}

TEST_CASE("isomorphism between non-group loops of the same class") {
  LoopTable l = loopforge::builtin_table("table1");
  // Isotopes at 0-based points 1 and 2 lie in the same class as the loop.
  LoopTable i1 = loopforge::principal_isotope(l, 1);
  std::optional<Perm> phi = loopforge::is_isomorphic(l, i1);
  REQUIRE(phi.has_value());
  check_isomorphism(l, i1, *phi);
}

TEST_CASE("isotopy classes of the first order-27 table") {
  LoopTable l = loopforge::builtin_table("table1");
  loopforge::IsotopyPartition part = loopforge::isotopy_classes(l);
  REQUIRE(part.classes.size() == 2);
  CHECK(part.classes[0].representative == 0);
  CHECK(part.classes[0].members ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 18, 19, 20, 21, 22, 23, 24, 25, 26});
  CHECK(part.classes[1].representative == 9);
  CHECK(part.classes[1].members ==
        std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16, 17});

  // The second class is the isomorphism class of the other builtin table.
  LoopTable other = loopforge::principal_isotope(l, 9);
  std::optional<Perm> phi =
      loopforge::is_isomorphic(other, loopforge::builtin_table("table2"));
  REQUIRE(phi.has_value());
  check_isomorphism(other, loopforge::builtin_table("table2"), *phi);
}

TEST_CASE("isotopy classes of the second order-27 table mirror the first") {
  loopforge::IsotopyPartition part =
      loopforge::isotopy_classes(loopforge::builtin_table("table2"));
  REQUIRE(part.classes.size() == 2);
  CHECK(part.classes[0].members == testutil::iota_n(9));
  CHECK(part.classes[1].members.size() == 18);
}

TEST_CASE("groups form a single isotopy class") {
  for (const char* name : {"c6", "s3", "d4", "g21"}) {
    loopforge::IsotopyPartition part =
        loopforge::isotopy_classes(loopforge::builtin_table(name));
    CHECK(part.classes.size() == 1);
    CHECK(part.classes[0].members.size() ==
          static_cast<std::size_t>(loopforge::builtin_table(name).size()));
  }
}

TEST_CASE("isotopes of a loop without the right inverse property can fail") {
  // x∘y = (x·a)·(a\y) always has left identity e, but a two-sided identity
  // needs R_a to invert to another right translation.  The order-5 loop has
  // no right inverse property, so every nontrivial isotope is rejected.
  loopforge::LoopTable l = testutil::order5_loop();
  CHECK(loopforge::principal_isotope(l, l.identity()) == l);
  for (int a = 1; a < l.size(); ++a)
    CHECK_LOOP_ERROR(loopforge::principal_isotope(l, a), Errc::no_identity);
}

TEST_CASE("isotopy classification respects the order cap") {
  LoopTable big = loopforge::abelian_group({5, 13});
  CHECK_LOOP_ERROR(loopforge::isotopy_classes(big), Errc::order_cap_exceeded);
  CHECK(loopforge::isotopy_classes(big, 65).classes.size() == 1);
}
