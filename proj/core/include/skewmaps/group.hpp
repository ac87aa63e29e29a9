#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewmaps/error.hpp"
#include "skewmaps/perm.hpp"

namespace skewmaps {

enum class GroupKind { dihedral, cyclic, product, swap_extension, generic };

struct GroupTag {
  GroupKind kind = GroupKind::generic;
  int param = 0;  // n for dihedral/cyclic, m for swap_extension
};

// A finite group given by its multiplication table. Elements are the indices
// 0..order-1 and index 0 is the identity.
//
// Dihedral groups D_n use the index j + n*r for the element a^j b^r, so that
// (j, r)(k, s) = (j + (-1)^r k mod n, r xor s).
class FiniteGroup {
 public:
  // Validates the table exhaustively (identity, Latin rows/columns,
  // associativity). Throws InvalidArgument on failure.
  FiniteGroup(std::vector<Elem> table, std::vector<std::string> labels, GroupTag tag = {});

  // Skips the cubic associativity check; for tables built from a known group
  // operation (permutation composition, coset products).
  static FiniteGroup trusted(std::vector<Elem> table, std::vector<std::string> labels,
                             GroupTag tag = {});

  int order() const noexcept { return order_; }
  Elem mul(Elem g, Elem h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  Elem inv(Elem g) const { return inv_[static_cast<std::size_t>(g)]; }
  Elem power(Elem g, long long k) const;
  int element_order(Elem g) const;
  const std::string& label(Elem g) const { return labels_[static_cast<std::size_t>(g)]; }
  const GroupTag& tag() const noexcept { return tag_; }
  std::span<const Elem> table() const noexcept { return table_; }

  bool is_dihedral() const noexcept { return tag_.kind == GroupKind::dihedral; }
  int dihedral_n() const;  // throws unless dihedral
  Elem delem(int j, int r) const;  // a^j b^r in a dihedral group
  int rot(Elem g) const;   // exponent j of a^j b^r
  int refl(Elem g) const;  // bit r of a^j b^r

  // Parses a label, a decimal index, or, for dihedral groups, a word in a, b
  // with optional integer exponents ("a^3b", "ba", "a^-1").
  std::optional<Elem> parse(std::string_view text) const;

  // Checks the group axioms on the stored table.
  bool verify_axioms() const;

 private:
  struct NoCheck {};
  FiniteGroup(std::vector<Elem> table, std::vector<std::string> labels, GroupTag tag, NoCheck);
  void init_inverses();

  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  GroupTag tag_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Sorted set of element indices of some parent group, closed under the group
// operation. The parent is passed explicitly to every operation.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<Elem> members);

  const std::vector<Elem>& elements() const noexcept { return members_; }
  int order() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(Elem g) const;
  bool is_trivial() const noexcept { return members_.size() <= 1; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Elem> members_;
};

enum class CosetSide { left, right };

struct CosetPartition {
  CosetSide side = CosetSide::left;
  std::vector<std::vector<Elem>> blocks;  // sorted; blocks[0] is the subgroup itself
  std::vector<int> block_of;              // element -> block index
};

// Constructors.
GroupPtr dihedral(int n);
GroupPtr cyclic(int n);
GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
// The group (D_m x D_m) x| <sigma> with sigma swapping coordinates, m odd >= 3.
// Element (d1, d2; s) has index (d1 * 2m + d2) + s * (2m)^2, with d_i indices of D_m.
GroupPtr swap_extension(int m);
Elem swap_elem(int m, Elem d1, Elem d2, int s);

struct CyclicPart {
  Subgroup subgroup;
  bool unique = true;  // false when n <= 2
};
CyclicPart cyclic_part(const FiniteGroup& g);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> members);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by);  // by * H * by^-1
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup core_of(const FiniteGroup& g, const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup center(const FiniteGroup& g);
CosetPartition cosets(const FiniteGroup& g, const Subgroup& h, CosetSide side);
// Every subgroup, by closure over generator subsets; throws CapacityError above bound.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound = 48);
// A short generating set chosen greedily (largest element orders first).
std::vector<Elem> generating_set(const FiniteGroup& g);

inline constexpr int kDefaultGroupBound = 48;

// All automorphisms (as permutations of the element indices). Dihedral groups
// with n > 2 use the closed form a -> a^s, b -> a^t b.
std::vector<Perm> automorphisms(const FiniteGroup& g, int bound = kDefaultGroupBound);
std::vector<Perm> automorphisms_generic(const FiniteGroup& g, int bound = kDefaultGroupBound);
std::vector<Perm> dihedral_automorphisms(const FiniteGroup& g);

// Bijections phi with phi(xy) = phi(x)phi(y); phi[i] is the image of element i.
std::optional<std::vector<Elem>> isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                             int bound = kDefaultGroupBound);
std::vector<std::vector<Elem>> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                int bound = kDefaultGroupBound);
// Extends images of generators along right multiplication. Returns the
// homomorphism when the assignment extends to an injective one.
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images);
bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, std::span<const Elem> phi);
// An automorphism found by randomized backtracking over generator images.
std::vector<Elem> random_automorphism(const FiniteGroup& g, std::mt19937_64& rng);

// G/N as a fresh table group; re-tagged dihedral when aN-style generators
// are found. coset_of maps parent elements to factor elements.
struct FactorGroup {
  GroupPtr group;
  std::vector<Elem> coset_of;
  std::vector<Elem> representative;  // factor element -> least parent element
};
FactorGroup factor_group(const FiniteGroup& g, const Subgroup& n);

// A subgroup materialized as a standalone group; embed[i] is the parent element.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elem> embed;
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// Searches for a dihedral presentation: an element A of order order/2 and an
// involution B outside <A> with BAB = A^-1. Returns phi: D_k -> g.
std::optional<std::vector<Elem>> find_dihedral_presentation(const FiniteGroup& g);

std::string dihedral_label(int n, int j, int r);

}  // namespace skewmaps
