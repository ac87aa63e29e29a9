#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewmaps/cayley_map.hpp"
#include "skewmaps/dart_map.hpp"

namespace skewmaps {

enum class Family { thm_main_1a, thm_main_1b, thm_main_2, thm_main_3, map1, map2, cfree };

struct FamilyId {
  Family family = Family::map1;
  int n = 0;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::string to_string(const FamilyId& f);  // "map1(8)"

// Throws InvalidArgument naming the violated parameter constraint.
CayleyMap build_family(const FamilyId& f);

// Every family member defined on D_n.
std::vector<FamilyId> families_on(int n);
// The members with a kernel of order 4 according to the classification
// theorem; these are what verify_theorem_main expects to find.
std::vector<FamilyId> kernel4_families(int n);

// Closed-form psi of the two infinite families, as permutations of D_n.
Perm map1_psi(const FiniteGroup& dn);
Perm map2_psi(const FiniteGroup& dn);

enum class RegularityOracle { skew, dart };

inline constexpr int kDefaultClassifyBound = 12;

struct ClassifyOptions {
  std::optional<int> kernel;  // keep classes with this kernel order only
  int jobs = 1;
  RegularityOracle oracle = RegularityOracle::skew;
  bool keep_candidates = false;  // record every candidate with both verdicts
  int bound = kDefaultClassifyBound;
};

struct Candidate {
  CayleyMap map;
  bool regular_skew = false;
  bool regular_dart = false;
};

struct MapClass {
  CayleyMap representative;
  MapAnalysis analysis;
  std::vector<Elem> key;
  std::optional<FamilyId> family;
  std::vector<Elem> witness;  // equivalence onto build_family(*family)
  int mirror = -1;            // index of the class of the mirrored map
};

struct ClassifyStats {
  std::size_t skew_morphisms = 0;
  std::size_t candidates = 0;
  std::size_t regular = 0;
  double seconds = 0;
};

struct ClassificationResult {
  int n = 0;
  std::vector<MapClass> classes;  // sorted by valence, then key
  std::vector<Candidate> candidates;
  ClassifyStats stats;

  // Classes counted up to mirror images as well.
  int reflection_classes() const;
};

// All regular Cayley maps on D_n up to equivalence: every orbit of every
// skew-morphism that is inverse-closed, avoids 1 and generates D_n gives a
// candidate (O, psi|O), kept when the chosen oracle finds it regular.
ClassificationResult classify(int n, const ClassifyOptions& options = {});

struct CheckLine {
  std::string subject;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string title;
  std::vector<CheckLine> lines;

  bool ok() const;
};

VerificationReport verify_theorem_main(int max_n, int jobs = 1);
VerificationReport verify_theorem_min(int max_n, int jobs = 1);
VerificationReport verify_family_lemmas(const std::vector<int>& n_list);
VerificationReport verify_cfree(int n, int jobs = 1);
// For every regular map with |C_n and kernel| > 2, psi normalizes L(C_n and kernel).
VerificationReport verify_rotation_normality(int max_n, int jobs = 1);
// Oracle agreement over every candidate, and the kernel conjugation identity
// over every regular candidate.
VerificationReport verify_oracles(int max_n, int jobs = 1);

}  // namespace skewmaps
