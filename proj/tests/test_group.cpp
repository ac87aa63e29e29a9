#include <numeric>

#include "doctest.h"
#include "skewmaps/group.hpp"

using namespace skewmaps;

namespace {

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

int divisor_sum(int n) {
  int s = 0;
  for (int d = 1; d <= n; ++d) s += n % d == 0 ? d : 0;
  return s;
}

}  // namespace

TEST_CASE("dihedral multiplication follows the presentation") {
  for (int n = 2; n <= 9; ++n) {
    const auto g = dihedral(n);
    CHECK(g->order() == 2 * n);
    CHECK(g->verify_axioms());
    const Elem a = g->delem(1, 0), b = g->delem(0, 1);
    CHECK(g->power(a, n) == kIdentity);
    CHECK(g->mul(b, b) == kIdentity);
    CHECK(g->mul(g->mul(b, a), g->mul(b, a)) == kIdentity);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < 2; ++r) {
        const Elem x = g->delem(j, r);
        CHECK(x == j + n * r);
        CHECK(g->mul(g->power(a, j), g->power(b, r)) == x);
      }
  }
}

TEST_CASE("labels and parsing") {
  const auto g = dihedral(6);
  CHECK(g->label(kIdentity) == "1");
  CHECK(g->label(g->delem(1, 0)) == "a");
  CHECK(g->label(g->delem(3, 1)) == "a^3b");
  CHECK(g->label(g->delem(0, 1)) == "b");
  CHECK(g->parse("ba") == g->delem(5, 1));
  CHECK(g->parse("a^-1") == g->delem(5, 0));
  CHECK(g->parse("a^3b") == g->delem(3, 1));
  CHECK(g->parse("7") == g->delem(1, 1));
  CHECK_FALSE(g->parse("c").has_value());
  for (Elem x = 0; x < g->order(); ++x) CHECK(g->parse(g->label(x)) == x);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup({0, 1, 1, 1}, {"1", "x"}), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup({1, 0, 0, 1}, {"1", "x"}), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup({0, 1, 1, 0}, {"1"}), InvalidArgument);
  CHECK_THROWS_AS(dihedral(0), InvalidArgument);
  CHECK_THROWS_AS(dihedral(1), InvalidArgument);
}

TEST_CASE("cyclic part of D_n") {
  const auto d2 = cyclic_part(*dihedral(2));
  CHECK_FALSE(d2.unique);
  CHECK(d2.subgroup.elements() == std::vector<Elem>{0, 1});
  const auto d5 = cyclic_part(*dihedral(5));
  CHECK(d5.unique);
  CHECK(d5.subgroup.order() == 5);
}

TEST_CASE("subgroup counts match tau(n) + sigma(n)") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(all_subgroups(*dihedral(n)).size()) == divisor_count(n) + divisor_sum(n));
  }
  CHECK_THROWS_AS(all_subgroups(*dihedral(30)), CapacityError);
}

TEST_CASE("normality and cores") {
  const auto g = dihedral(3);
  const Elem b = g->delem(0, 1);
  const Elem gens[] = {b};
  const auto h = subgroup_generated(*g, gens);
  CHECK(h.order() == 2);
  CHECK_FALSE(is_normal(*g, h));
  CHECK(core_of(*g, h).is_trivial());
  CHECK(is_normal(*g, cyclic_part(*g).subgroup));
  const auto d4 = dihedral(4);
  CHECK(center(*d4).elements() == std::vector<Elem>{0, 2});
  const Elem ab[] = {d4->delem(0, 1), d4->delem(2, 0)};
  const auto klein = subgroup_generated(*d4, ab);
  CHECK(klein.order() == 4);
  CHECK(is_normal(*d4, klein));
  CHECK(conjugate(*d4, klein, d4->delem(1, 0)) == klein);
}

TEST_CASE("cosets partition the group") {
  const auto g = dihedral(4);
  const Elem gens[] = {g->delem(0, 1)};
  const auto h = subgroup_generated(*g, gens);
  for (auto side : {CosetSide::left, CosetSide::right}) {
    const auto c = cosets(*g, h, side);
    CHECK(c.blocks.size() == 4);
    CHECK(c.blocks[0] == h.elements());
    for (Elem x = 0; x < g->order(); ++x) {
      const auto& block = c.blocks[c.block_of[x]];
      CHECK(std::find(block.begin(), block.end(), x) != block.end());
    }
  }
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(*dihedral(2)).size() == 6);
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto g = dihedral(n);
    const auto autos = automorphisms(*g);
    CHECK(static_cast<int>(autos.size()) == n * euler_phi(n));
    if (n <= 6) CHECK(automorphisms_generic(*g) == autos);
  }
  CHECK(automorphisms(*cyclic(12)).size() == 4);
}

TEST_CASE("isomorphisms between small groups") {
  const auto klein = direct_product(*cyclic(2), *cyclic(2));
  const auto iso = isomorphism(*dihedral(2), *klein);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(*dihedral(2), *klein, *iso));
  CHECK(all_isomorphisms(*dihedral(2), *klein).size() == 6);
  CHECK_FALSE(isomorphism(*dihedral(3), *cyclic(6)).has_value());
  CHECK_FALSE(isomorphism(*dihedral(4), *dihedral(3)).has_value());
}

TEST_CASE("swap extension") {
  const auto g = swap_extension(3);
  CHECK(g->order() == 72);
  CHECK(g->verify_axioms());
  const Elem sigma = swap_elem(3, 0, 0, 1);
  CHECK(g->element_order(sigma) == 2);
  for (Elem d1 = 0; d1 < 6; ++d1)
    for (Elem d2 = 0; d2 < 6; ++d2)
      CHECK(g->mul(g->mul(sigma, swap_elem(3, d1, d2, 0)), sigma) == swap_elem(3, d2, d1, 0));
  CHECK_THROWS_AS(swap_extension(4), InvalidArgument);
}

TEST_CASE("factor groups are retagged as dihedral") {
  const auto g = dihedral(8);
  const Elem gens[] = {g->delem(4, 0)};
  const auto f = factor_group(*g, subgroup_generated(*g, gens));
  CHECK(f.group->order() == 8);
  CHECK(f.group->is_dihedral());
  CHECK(f.group->dihedral_n() == 4);
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem y = 0; y < g->order(); ++y)
      CHECK(f.coset_of[g->mul(x, y)] == f.group->mul(f.coset_of[x], f.coset_of[y]));
}

TEST_CASE("random automorphisms are automorphisms") {
  std::mt19937_64 rng(7);
  for (const auto& g : {dihedral(6), swap_extension(3)}) {
    for (int i = 0; i < 5; ++i) {
      const auto alpha = random_automorphism(*g, rng);
      CHECK(is_isomorphism(*g, *g, alpha));
    }
  }
}

TEST_CASE("dihedral presentations are found in foreign tables") {
  const auto g = dihedral(5);
  std::vector<Elem> table(g->table().begin(), g->table().end());
  std::vector<std::string> labels;
  for (Elem x = 0; x < g->order(); ++x) labels.push_back("e" + std::to_string(x));
  const FiniteGroup plain(std::move(table), std::move(labels));
  const auto phi = find_dihedral_presentation(plain);
  REQUIRE(phi.has_value());
  CHECK(is_isomorphism(*g, plain, *phi));
  CHECK_FALSE(find_dihedral_presentation(*cyclic(6)).has_value());
}
