#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewmaps/error.hpp"
#include "skewmaps/group.hpp"
#include "skewmaps/skew.hpp"

namespace skewmaps {

enum class MapErrorKind { contains_identity, not_inverse_closed, not_generating, not_a_cycle };

class MapError : public InvalidArgument {
 public:
  MapError(MapErrorKind kind, const std::string& what) : InvalidArgument(what), kind_(kind) {}
  MapErrorKind kind() const noexcept { return kind_; }

 private:
  MapErrorKind kind_;
};

// CM(G, X, p): X an inverse-closed generating set without the identity and p
// the cyclic order (x_1, ..., x_k) with p(x_i) = x_{i+1 mod k}.
class CayleyMap {
 public:
  CayleyMap(GroupPtr g, std::vector<Elem> generators, std::vector<Elem> rotation);
  // X is read off the rotation.
  CayleyMap(GroupPtr g, std::vector<Elem> rotation);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<Elem>& rotation() const noexcept { return rotation_; }
  std::vector<Elem> generators() const;  // sorted
  int valence() const noexcept { return static_cast<int>(rotation_.size()); }

  bool contains(Elem x) const { return position(x) >= 0; }
  int position(Elem x) const { return pos_[static_cast<std::size_t>(x)]; }
  Elem next(Elem x) const { return rotate(x, 1); }
  Elem rotate(Elem x, long long k) const;  // p^k(x)

 private:
  GroupPtr group_;
  std::vector<Elem> rotation_;
  std::vector<int> pos_;
};

// Least c >= 0 with p^c(x) = x^-1.
int chi(const CayleyMap& m, Elem x);

// pi on X from chi: pi(x) = chi(p(x)) - chi(x) + 1 mod |X|, in 1..|X| and
// indexed like the rotation. Throws InvalidArgument for non-regular maps.
std::vector<int> power_on_X(const CayleyMap& m);

// Builds psi from its values on X: psi = p on X, pi on X from chi, and
// psi(gx) = psi(g) psi^pi(g)(x) along a breadth-first walk. Present iff the
// result is a skew-morphism of order |X|, which happens iff m is regular.
std::optional<SkewMorphism> construct_skew(const CayleyMap& m);

// The vertex-stabilizer route: the map automorphism sending the dart (1, x_1)
// to (1, p(x_1)) acting on vertices. Present iff m is regular.
std::optional<SkewMorphism> associated_skew(const CayleyMap& m);

bool is_regular(const CayleyMap& m);

struct MapAnalysis {
  bool regular = false;
  std::optional<SkewMorphism> skew;
  std::vector<int> chi;  // indexed like the rotation
  Subgroup kernel;       // empty when not regular
  int skew_type = 0;     // |G : kernel|, 0 when not regular
  std::optional<int> balance;
  long long automorphisms = 0;  // map automorphisms, counted on darts
};

MapAnalysis analyze(const CayleyMap& m);

// Least t in 1..|X| with p(x)^-1 = p^t(x^-1) for all x in X.
std::optional<int> t_balance(const CayleyMap& m);

// An isomorphism phi: G1 -> G2 with phi(X1) = X2 and phi p1 = p2 phi, as the
// list of images of the elements of G1.
std::optional<std::vector<Elem>> equivalent(const CayleyMap& m1, const CayleyMap& m2);
// Equivalence to the mirror image (reversed rotation) of m2.
std::optional<std::vector<Elem>> reflection_equivalent(const CayleyMap& m1, const CayleyMap& m2);
CayleyMap mirror(const CayleyMap& m);

// Image of m under an isomorphism phi onto the group target.
CayleyMap transport(const CayleyMap& m, std::span<const Elem> phi, GroupPtr target);

// {g : psi L_g psi^-1 in L(G)} compared with the kernel of pi.
bool kernel_conjugation_check(const CayleyMap& m);

// Rotation normalized to start at its least element.
std::vector<Elem> normalized_rotation(std::span<const Elem> rotation);
// The least normalized image of the rotation over the given automorphisms.
// Equal keys for the full automorphism group mean equivalent maps.
std::vector<Elem> canonical_key(const CayleyMap& m, const std::vector<Perm>& autos);

std::string describe(const CayleyMap& m);  // "CM(D_4, (a, b, a^3))"

}  // namespace skewmaps
