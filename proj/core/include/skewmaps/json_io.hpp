#pragma once

#include <nlohmann/json.hpp>

#include "skewmaps/catalog.hpp"
#include "skewmaps/quotient.hpp"

namespace skewmaps {

using nlohmann::json;

json group_to_json(const FiniteGroup& g);
// Accepts the dihedral, swap_extension and table descriptors.
GroupPtr group_from_json(const json& j);

// {"j":..,"r":..} for dihedral groups, the index otherwise.
json elem_to_json(const FiniteGroup& g, Elem x);
// Also accepts label strings such as "a^3b".
Elem elem_from_json(const FiniteGroup& g, const json& j);

json skew_to_json(const FiniteGroup& g, const SkewMorphism& s);
// Returns the validated skew-morphism; "order" and "pi" must agree with psi when present.
SkewMorphism skew_from_json(const FiniteGroup& g, const json& j);

json map_to_json(const CayleyMap& m);
CayleyMap map_from_json(const json& j);

json analysis_to_json(const CayleyMap& m, const MapAnalysis& a);
json class_to_json(const MapClass& c);
json quotient_to_json(const QuotientMap& q, const QuotientReport& r);
json check_to_json(const std::string& title, const CheckLine& line);

}  // namespace skewmaps
