#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewmaps/cayley_map.hpp"

namespace skewmaps {

// Darts of Cay(G, X) as (g, g x_i) with index g*k + i.
// R: (g, g x_i) -> (g, g x_{i+1});  T: (g, g x) -> (g x, g x x^-1).
struct DartSystem {
  int vertices = 0;
  int valence = 0;
  Perm rotation;
  Perm reversal;

  int dart_count() const noexcept { return vertices * valence; }
  int dart(Elem tail, int slot) const noexcept { return tail * valence + slot; }
  Elem tail(int d) const noexcept { return d / valence; }
  int slot(int d) const noexcept { return d % valence; }
};

DartSystem build_darts(const CayleyMap& m);

// The unique dart permutation sending d0 to d1 and commuting with R and T.
std::optional<Perm> extend_automorphism(const DartSystem& ds, int d0, int d1);

// Number of targets d1 reachable from the base dart (= |Aut(M)|).
long long automorphism_count(const DartSystem& ds);

// Regular iff the base dart (1, x_1) extends to (1, p(x_1)).
bool is_regular(const DartSystem& ds);

// Projection of a dart permutation onto tails; absent when darts with equal
// tails land on different tails.
std::optional<Perm> vertex_action(const DartSystem& ds, const Perm& phi);

std::optional<SkewMorphism> stabilizer_skew(const DartSystem& ds, const CayleyMap& m);

// One line per vertex: "g: x_1 x_2 ... x_k" listing the heads in rotation order.
std::string rotation_system_text(const DartSystem& ds, const CayleyMap& m);

// Aut(M) of a regular map as a table group: elements L_g psi^i of Sym(G),
// with the product of elements u, v acting as u after v.
struct MapAutomorphismGroup {
  GroupPtr group;
  std::vector<Perm> perms;
  std::vector<Elem> left;  // G element -> index of L_g
  Elem psi = 0;            // index of the associated skew-morphism

  Subgroup left_of(std::span<const Elem> members) const;
};

inline constexpr int kDefaultAutBound = 1024;

// Throws InvalidArgument for non-regular maps, CapacityError above bound.
MapAutomorphismGroup map_automorphism_group(const CayleyMap& m, int bound = kDefaultAutBound);

// The subgroup N of the rotation subgroup C_n with L(N) the core of L(C_n)
// in Aut(M). Dihedral maps only.
Subgroup rotation_core(const CayleyMap& m, const MapAutomorphismGroup& aut);

}  // namespace skewmaps
