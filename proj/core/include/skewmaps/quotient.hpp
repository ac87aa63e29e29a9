#pragma once

#include "skewmaps/cayley_map.hpp"

namespace skewmaps {

// True iff n is normal and psi maps every n-coset onto an n-coset. Throws
// InvalidArgument when m is not regular.
bool is_block_system(const CayleyMap& m, const Subgroup& n);

struct QuotientMap {
  FactorGroup factor;
  CayleyMap map;  // CM(G/N, X/N, p^{G/N}) with p^{G/N}(xN) = p(x)N
};

// Throws InvalidArgument when the cosets do not form a block system or X
// meets n, and Error when p^{G/N} is not a well-defined single cycle.
QuotientMap quotient_map(const CayleyMap& m, const Subgroup& n);

struct QuotientReport {
  bool quotient_regular = false;  // both oracles
  int psi_order = 0;
  int normal_order = 0;
  int quotient_psi_order = 0;
  bool union_of_cosets = false;
  bool order_bound = false;   // |<psi>| <= |N| |<psi^{G/N}>|
  bool equality_rule = false; // equality exactly when X is a union of cosets
  bool congruence = false;    // pi^{G/N}(gN) = pi(g) mod |<psi^{G/N}>|
  bool coset_action = false;  // psi^{G/N}(gN) = psi(g)N
  long long quotient_automorphisms = 0;
  long long induced_action = 0;  // distinct actions of Aut(M) on the cosets
  int quotient_kernel = 0;

  bool ok() const {
    return quotient_regular && order_bound && equality_rule && congruence && coset_action &&
           quotient_automorphisms == induced_action;
  }
};

QuotientReport verify_quotient_laws(const CayleyMap& m, const Subgroup& n);

}  // namespace skewmaps
