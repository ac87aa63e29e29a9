#include <set>

#include "doctest.h"
#include "skewmaps/skew.hpp"

using namespace skewmaps;

TEST_CASE("pruned enumeration equals the naive filter") {
  for (const auto& g : {dihedral(2), dihedral(3), dihedral(4), cyclic(6), cyclic(8)}) {
    CAPTURE(g->order());
    const auto pruned = enumerate_skew_morphisms(*g);
    const auto naive = enumerate_skew_morphisms_naive(*g);
    CHECK(pruned == naive);
  }
}

TEST_CASE("brute-force skew-morphism counts") {
  // Frozen from tests/oracles/oracle.py.
  CHECK(enumerate_skew_morphisms_naive(*dihedral(2)).size() == 6);
  CHECK(enumerate_skew_morphisms_naive(*dihedral(3)).size() == 12);
  CHECK(enumerate_skew_morphisms_naive(*dihedral(4)).size() == 20);
}

TEST_CASE("skew-morphism counts of D_n") {
  const std::vector<std::size_t> expected{6, 12, 20, 20, 46, 42, 72, 108, 138, 110, 136};
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(enumerate_skew_morphisms(*dihedral(n)).size() == expected[n - 2]);
  }
  for (int p : {5, 7, 11, 13}) {
    const auto g = dihedral(p);
    CHECK(enumerate_skew_morphisms(*g).size() == automorphisms(*g).size());
  }
}

TEST_CASE("results are sorted, valid and closed under conjugation by automorphisms") {
  const auto g = dihedral(6);
  const auto all = enumerate_skew_morphisms(*g);
  std::set<Perm> psis;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i) CHECK(all[i - 1].psi < all[i].psi);
    const auto again = check_skew(*g, all[i].psi);
    REQUIRE(again.has_value());
    CHECK(*again == all[i]);
    CHECK(all[i].order < g->order());
    psis.insert(all[i].psi);
  }
  for (const auto& alpha : automorphisms(*g))
    for (const auto& s : all) CHECK(psis.count(alpha * s.psi * alpha.inverse()) == 1);
}

TEST_CASE("power function identities") {
  const auto g = dihedral(4);
  for (const auto& s : enumerate_skew_morphisms(*g)) {
    const auto k = kernel(*g, s);
    CHECK(is_subgroup(*g, k.elements()));
    CHECK(k.contains(kIdentity));
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y = 0; y < g->order(); ++y) CHECK(power_sum_check(*g, s, x, y));
  }
}

TEST_CASE("automorphisms are the skew-morphisms with full kernel") {
  const auto g = dihedral(8);
  std::size_t full = 0;
  for (const auto& s : enumerate_skew_morphisms(*g)) {
    const bool aut = kernel(*g, s).order() == g->order();
    CHECK(aut == is_group_automorphism(*g, s.psi));
    full += aut;
  }
  CHECK(full == automorphisms(*g).size());
}

TEST_CASE("check_skew rejects non-skew permutations") {
  const auto g = dihedral(3);
  // Swap a and b only.
  std::vector<Elem> img{0, 3, 2, 1, 4, 5};
  CHECK_FALSE(check_skew(*g, Perm(img)).has_value());
  std::vector<Elem> moves_identity{1, 0, 2, 3, 4, 5};
  CHECK_FALSE(check_skew(*g, Perm(moves_identity)).has_value());
  CHECK_THROWS_AS(check_skew(*g, Perm::identity(4)), InvalidArgument);
}

TEST_CASE("orbits") {
  const auto g = dihedral(5);
  const auto all = enumerate_skew_morphisms(*g);
  for (const auto& s : all) {
    const auto orbit = orbit_of(s, g->delem(1, 0));
    CHECK(static_cast<long long>(orbit.size()) <= s.psi.order());
    CHECK(s.psi(orbit.back()) == orbit.front());
  }
}

TEST_CASE("parallel search is deterministic") {
  const auto g = dihedral(10);
  SkewSearchOptions serial, parallel;
  parallel.jobs = 3;
  CHECK(enumerate_skew_morphisms(*g, serial) == enumerate_skew_morphisms(*g, parallel));
}

TEST_CASE("capacity bounds") {
  CHECK_THROWS_AS(enumerate_skew_morphisms(*dihedral(20)), CapacityError);
  CHECK_THROWS_AS(enumerate_skew_morphisms_naive(*dihedral(5)), CapacityError);
}
