#include <doctest.h>

#include "fusionscan/group_catalog.hpp"

using namespace fusionscan;

TEST_CASE("catalog sizes match the number of groups of each order") {
  const int expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  for (int n = 1; n <= 16; ++n) {
    const auto groups = enumerateGroups(n);
    CHECK_MESSAGE(groups.size() == static_cast<std::size_t>(expected[n - 1]), "order " << n);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(groups[i].order() == n);
      CHECK(checkGroupAxioms(n, groups[i].table()).empty());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(isomorphic(groups[i], groups[j]));
    }
  }
}

TEST_CASE("catalog is deterministic") {
  for (int n = 1; n <= 16; ++n) CHECK(enumerateGroups(n) == enumerateGroups(n));
}

TEST_CASE("order 4: cyclic and Klein four") {
  const auto g = enumerateGroups(4);
  REQUIRE(g.size() == 2);
  CHECK(isomorphic(g[0], cyclicGroup(4)));
  CHECK(isomorphic(g[1], directProduct(cyclicGroup(2), cyclicGroup(2))));
}

TEST_CASE("orders beyond the catalog are refused") {
  CHECK_THROWS_AS(enumerateGroups(17), UnsupportedOrder);
  CHECK_THROWS_AS(enumerateGroups(0), UnsupportedOrder);
}

TEST_CASE("group axioms checker catches broken tables") {
  CHECK_FALSE(checkGroupAxioms(2, {0, 1, 1, 1}).empty());
  CHECK_FALSE(checkGroupAxioms(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}).empty());
  CHECK(checkGroupAxioms(2, {0, 1, 1, 0}).empty());
}

TEST_CASE("subgroups and element orders") {
  const auto q8 = enumerateGroups(8);
  int abelian = 0;
  for (const auto& g : q8) abelian += g.isAbelian();
  CHECK(abelian == 3);
  const auto c6 = cyclicGroup(6);
  CHECK(c6.subgroups().size() == 4);
  for (auto m : c6.subgroups()) CHECK(c6.closure(m) == m);
  int maxOrder = 0;
  for (int a = 0; a < 6; ++a) maxOrder = std::max(maxOrder, c6.elementOrder(a));
  CHECK(maxOrder == 6);
}
