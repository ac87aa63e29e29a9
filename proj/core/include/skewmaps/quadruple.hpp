#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewmaps/cayley_map.hpp"
#include "skewmaps/dart_map.hpp"
#include "skewmaps/graph.hpp"

namespace skewmaps {

// (G, H, x, y): G = HY with H and Y = <y> meeting trivially, Y core-free,
// G = <Y, x>, YxY = Yx^-1Y, y != 1 and H nontrivial.
struct AdmissibleQuadruple {
  GroupPtr group;
  Subgroup h;
  Elem x = 0;
  Elem y = 0;
  Subgroup y_group;
};

enum class QuadrupleAxiom {
  h_not_subgroup,
  y_identity,
  h_trivial,
  intersection_nontrivial,
  not_factorization,
  y_not_core_free,
  not_generating,
  double_coset_asymmetric,
};

std::string axiom_name(QuadrupleAxiom a);

struct Admissibility {
  std::optional<AdmissibleQuadruple> quadruple;
  std::optional<QuadrupleAxiom> violated;  // first failing axiom
};

Admissibility check_admissible(GroupPtr g, const Subgroup& h, Elem x, Elem y);

std::vector<Elem> double_coset(const FiniteGroup& g, const Subgroup& y, Elem x);  // sorted YxY

struct InducedMap {
  SubgroupGroup h;  // H as a standalone group
  CayleyMap map;
  Perm skew;        // the action of y on H, h -> h' with h'Y = yhY
};

// X = {h in H : hY within YxY}, p = (x', y(x'), y^2(x'), ...) where x' is the
// H-representative of xY. Asserts that the result is regular with |G|
// automorphisms.
InducedMap induced_cayley_map(const AdmissibleQuadruple& q);

struct RegularQuadruple {
  MapAutomorphismGroup aut;
  AdmissibleQuadruple quadruple;  // (Aut(M), L(G), L_{x_1}, psi)
};

RegularQuadruple from_regular_map(const CayleyMap& m, int bound = kDefaultAutBound);

// (G, alpha(H), alpha(x), alpha(y)) for an automorphism alpha of G.
AdmissibleQuadruple conjugate_quadruple(const AdmissibleQuadruple& q, std::span<const Elem> alpha);

// Vertices are the left cosets of y; gY ~ g'Y iff g^-1 g' in YxY.
// Throws InvalidArgument when YxY != Yx^-1Y.
SimpleGraph coset_graph(const FiniteGroup& g, const Subgroup& y, Elem x);

// The quadruple on (D_m x D_m) x| <s> with H = {(d, r^i)}, x = (r, 1) and
// y = (c^l, c^l)s, for c, r the rotation and reflection generators of D_m.
AdmissibleQuadruple swap_quadruple(int m, int ell);
// D_{2m} -> H with a -> (c, r), b -> (r, 1), as parent indices.
std::vector<Elem> swap_dihedral_embedding(int m);

}  // namespace skewmaps
