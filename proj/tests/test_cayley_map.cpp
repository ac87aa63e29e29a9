#include "doctest.h"
#include "skewmaps/catalog.hpp"

using namespace skewmaps;

namespace {

MapErrorKind error_kind(GroupPtr g, std::vector<Elem> rot) {
  try {
    CayleyMap m(std::move(g), std::move(rot));
  } catch (const MapError& e) {
    return e.kind();
  }
  FAIL("expected a MapError");
  return MapErrorKind::not_a_cycle;
}

}  // namespace

TEST_CASE("construction errors are distinguished") {
  const auto g = dihedral(5);
  const Elem a = g->delem(1, 0), a4 = g->delem(4, 0), b = g->delem(0, 1), ab = g->delem(1, 1);
  CHECK(error_kind(g, {a, b}) == MapErrorKind::not_inverse_closed);
  CHECK(error_kind(g, {kIdentity, b, ab}) == MapErrorKind::contains_identity);
  CHECK(error_kind(g, {a, a4}) == MapErrorKind::not_generating);
  CHECK_THROWS_AS(CayleyMap(g, {a, a4, b}, {a, b, b}), MapError);
  try {
    CayleyMap(g, {a, a4, b}, {a, b});
    FAIL("rotation shorter than X accepted");
  } catch (const MapError& e) {
    CHECK(e.kind() == MapErrorKind::not_a_cycle);
  }
  CHECK_THROWS_AS(CayleyMap(g, {a, a4, 12}), InvalidArgument);
}

TEST_CASE("rotation accessors") {
  const auto m = build_family({Family::map1, 8});
  const auto& g = m.group();
  CHECK(m.valence() == 8);
  CHECK(m.rotation().front() == g.delem(0, 1));
  CHECK(m.next(g.delem(0, 1)) == g.delem(1, 0));
  CHECK(m.rotate(g.delem(0, 1), -1) == g.delem(7, 0));
  CHECK(m.rotate(g.delem(0, 1), 17) == g.delem(1, 0));
  CHECK(m.position(g.delem(2, 1)) == 2);
  CHECK_FALSE(m.contains(g.delem(2, 0)));
  CHECK(describe(m) == "CM(D_8, (b, a, a^2b, a^3, a^4b, a^5, a^6b, a^7))");
}

TEST_CASE("chi and the power function on X") {
  const auto m = build_family({Family::map1, 8});
  const auto& g = m.group();
  CHECK(chi(m, g.delem(0, 1)) == 0);
  CHECK(chi(m, g.delem(1, 0)) == 6);
  CHECK(chi(m, g.delem(3, 0)) == 2);
  const auto pi = power_on_X(m);
  const auto s = construct_skew(m);
  REQUIRE(s.has_value());
  for (int i = 0; i < m.valence(); ++i) CHECK(pi[i] == s->pi[m.rotation()[i]]);
  const auto bad = CayleyMap(dihedral(4), {1, 4, 3, 5});
  CHECK_FALSE(is_regular(bad));
  CHECK_THROWS_AS(power_on_X(bad), InvalidArgument);
}

TEST_CASE("both regularity routes agree and restrict to p") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = dihedral(n);
    for (const auto& s : enumerate_skew_morphisms(*g)) {
      for (const auto& cyc : s.psi.cycles()) {
        if (cyc.size() < 2) continue;
        try {
          const CayleyMap m(g, cyc);
          const auto js = construct_skew(m);
          const auto ds = associated_skew(m);
          REQUIRE(js.has_value() == ds.has_value());
          CHECK(js.has_value() == is_regular(m));
          if (!js) continue;
          CHECK(*js == *ds);
          CHECK(js->order == m.valence());
          for (Elem x : m.rotation()) CHECK(js->psi(x) == m.next(x));
        } catch (const MapError&) {
        }
      }
    }
  }
}

TEST_CASE("analysis of the octahedral map") {
  const auto g = dihedral(3);
  const CayleyMap m(g, {g->delem(1, 0), g->delem(2, 0), g->delem(0, 1), g->delem(1, 1)});
  const auto a = analyze(m);
  CHECK(a.regular);
  CHECK(a.kernel.order() == 2);
  CHECK(a.skew_type == 3);
  CHECK(a.automorphisms == 24);
  CHECK(a.kernel.order() * a.skew_type == g->order());
}

TEST_CASE("balanced maps") {
  const auto g = dihedral(5);
  const CayleyMap m(g, {g->delem(0, 1), g->delem(1, 1)});
  CHECK(t_balance(m) == 1);
  const auto a = analyze(m);
  CHECK(a.kernel.order() == g->order());
  CHECK_FALSE(t_balance(build_family({Family::map1, 8})).has_value());
  const auto d4 = dihedral(4);
  const CayleyMap anti(d4, {d4->delem(1, 0), d4->delem(0, 1), d4->delem(3, 0), d4->delem(2, 1)});
  CHECK(t_balance(anti) == 3);
}

TEST_CASE("equivalence") {
  const auto m = build_family({Family::map1, 6});
  const auto& g = m.group();
  auto rot = m.rotation();
  std::rotate(rot.begin(), rot.begin() + 3, rot.end());
  const CayleyMap shifted(m.group_ptr(), rot);
  const auto phi = equivalent(m, shifted);
  REQUIRE(phi.has_value());
  CHECK(is_isomorphism(g, g, *phi));
  for (Elem x : m.rotation()) CHECK((*phi)[m.next(x)] == shifted.next((*phi)[x]));
  CHECK_FALSE(equivalent(m, build_family({Family::thm_main_3, 6})).has_value());
  CHECK_FALSE(equivalent(build_family({Family::map1, 8}), build_family({Family::map2, 8})).has_value());
  const auto alpha = automorphisms(g)[5];
  const auto moved = transport(m, alpha.images(), m.group_ptr());
  CHECK(equivalent(m, moved).has_value());
  CHECK(canonical_key(m, automorphisms(g)) == canonical_key(moved, automorphisms(g)));
}

TEST_CASE("mirror images") {
  const auto m = build_family({Family::map1, 10});
  const auto mm = mirror(m);
  CHECK(normalized_rotation(mirror(mm).rotation()) == normalized_rotation(m.rotation()));
  CHECK(reflection_equivalent(m, mm).has_value() == equivalent(m, m).has_value());
  CHECK(is_regular(mm));
}

TEST_CASE("canonical keys separate exactly the equivalence classes on D_4") {
  const auto g = dihedral(4);
  const auto autos = automorphisms(*g);
  std::vector<CayleyMap> maps;
  for (const auto& s : enumerate_skew_morphisms(*g))
    for (const auto& cyc : s.psi.cycles()) {
      try {
        CayleyMap m(g, cyc);
        if (is_regular(m)) maps.push_back(m);
      } catch (const MapError&) {
      }
    }
  REQUIRE(maps.size() > 10);
  for (const auto& x : maps)
    for (const auto& y : maps)
      CHECK((canonical_key(x, autos) == canonical_key(y, autos)) == equivalent(x, y).has_value());
}

TEST_CASE("kernel conjugation identity") {
  for (const auto& f : {FamilyId{Family::map1, 8}, FamilyId{Family::map2, 8}, FamilyId{Family::thm_main_2, 4}})
    CHECK(kernel_conjugation_check(build_family(f)));
}

TEST_CASE("normalized rotations") {
  const std::vector<Elem> rot{5, 2, 7, 1, 3};
  CHECK(normalized_rotation(rot) == std::vector<Elem>{1, 3, 5, 2, 7});
}
