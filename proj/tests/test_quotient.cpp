#include "doctest.h"
#include "skewmaps/catalog.hpp"
#include "skewmaps/quotient.hpp"

using namespace skewmaps;

namespace {

Subgroup generated_by(const FiniteGroup& g, Elem x) {
  const Elem gens[] = {x};
  return subgroup_generated(g, gens);
}

}  // namespace

TEST_CASE("map1(8) modulo <a^4>") {
  const auto m = build_family({Family::map1, 8});
  const auto& g = m.group();
  const auto n = generated_by(g, g.delem(4, 0));
  CHECK(is_block_system(m, n));
  const auto q = quotient_map(m, n);
  CHECK(q.map.group().is_dihedral());
  CHECK(q.map.group().dihedral_n() == 4);
  CHECK(q.map.valence() == 4);
  for (Elem x : m.rotation()) CHECK(q.map.next(q.factor.coset_of[x]) == q.factor.coset_of[m.next(x)]);
  const auto r = verify_quotient_laws(m, n);
  CHECK(r.ok());
  CHECK(r.quotient_regular);
  CHECK(r.psi_order == 8);
  CHECK(r.normal_order == 2);
  CHECK(r.quotient_psi_order == 4);
  CHECK(r.union_of_cosets);
  CHECK(r.quotient_kernel == 4);
}

TEST_CASE("map1(16) modulo <a^8>") {
  const auto m = build_family({Family::map1, 16});
  const auto& g = m.group();
  const auto r = verify_quotient_laws(m, generated_by(g, g.delem(8, 0)));
  CHECK(r.ok());
  CHECK(r.psi_order == r.normal_order * r.quotient_psi_order);
  CHECK(r.union_of_cosets);
  CHECK(r.quotient_kernel == 4);
  const auto q = quotient_map(m, generated_by(g, g.delem(8, 0)));
  CHECK(equivalent(q.map, build_family({Family::map1, 8})).has_value());
}

TEST_CASE("map2(16) modulo <a^8> is map1(8)") {
  const auto m = build_family({Family::map2, 16});
  const auto& g = m.group();
  const auto q = quotient_map(m, generated_by(g, g.delem(8, 0)));
  CHECK(verify_quotient_laws(m, generated_by(g, g.delem(8, 0))).ok());
  CHECK((equivalent(q.map, build_family({Family::map1, 8})) || equivalent(q.map, build_family({Family::map2, 8}))));
}

TEST_CASE("non-normal or non-block subgroups are rejected") {
  const auto m = build_family({Family::map1, 8});
  const auto& g = m.group();
  CHECK_FALSE(is_block_system(m, generated_by(g, g.delem(0, 1))));
  CHECK_THROWS_AS(quotient_map(m, generated_by(g, g.delem(0, 1))), InvalidArgument);
  const auto a2 = generated_by(g, g.delem(2, 0));
  if (!is_block_system(m, a2)) CHECK_THROWS_AS(quotient_map(m, a2), InvalidArgument);
  CHECK_THROWS_AS(is_block_system(CayleyMap(dihedral(4), {1, 4, 3, 5}), generated_by(g, 2)), InvalidArgument);
}

TEST_CASE("strict inequality when X is not a union of cosets") {
  const auto g = dihedral(6);
  const CayleyMap m(g, {g->delem(0, 1), g->delem(1, 1)});
  const auto n = generated_by(*g, g->delem(3, 0));
  REQUIRE(is_block_system(m, n));
  const auto r = verify_quotient_laws(m, n);
  CHECK_FALSE(r.union_of_cosets);
  CHECK(r.order_bound);
  CHECK(r.equality_rule);
  CHECK(r.psi_order == 2);
  CHECK(r.psi_order < r.normal_order * r.quotient_psi_order);
}
