#pragma once

#include <optional>
#include <vector>

#include "skewmaps/group.hpp"
#include "skewmaps/perm.hpp"

namespace skewmaps {

// A permutation psi of a group fixing the identity, together with its order r
// and power function pi: G -> {1..r}, satisfying psi(gh) = psi(g) psi^pi(g)(h).
struct SkewMorphism {
  Perm psi;
  int order = 1;
  std::vector<int> pi;

  friend bool operator==(const SkewMorphism&, const SkewMorphism&) = default;
};

// Validates psi against the defining identity over all pairs. pi(g) is the
// least k in {1..r} that works. Throws InvalidArgument if psi is not a
// permutation of the group's elements.
std::optional<SkewMorphism> check_skew(const FiniteGroup& g, const Perm& psi);

// {g : pi(g) = 1}.
Subgroup kernel(const FiniteGroup& g, const SkewMorphism& s);

// pi(gh) == sum_{i < pi(g)} pi(psi^i(h)) (mod r).
bool power_sum_check(const FiniteGroup& g, const SkewMorphism& s, Elem x, Elem y);

// (x, psi(x), psi^2(x), ...) up to the first repetition.
std::vector<Elem> orbit_of(const SkewMorphism& s, Elem x);

bool is_group_automorphism(const FiniteGroup& g, const Perm& p);

inline constexpr int kDefaultSkewBound = 32;

struct SkewSearchOptions {
  int bound = kDefaultSkewBound;
  int jobs = 1;
};

struct SkewSearchStats {
  long long nodes = 0;
  long long leaves = 0;
};

// All skew-morphisms of g, sorted by psi. Backtracking search with
// propagation of the defining identity; throws CapacityError for |G| > bound.
std::vector<SkewMorphism> enumerate_skew_morphisms(const FiniteGroup& g,
                                                   const SkewSearchOptions& options = {},
                                                   SkewSearchStats* stats = nullptr);

// Filters every permutation fixing the identity. Reference oracle for tiny groups.
std::vector<SkewMorphism> enumerate_skew_morphisms_naive(const FiniteGroup& g, int bound = 8);

}  // namespace skewmaps
