#include "skewmaps/json_io.hpp"

#include <algorithm>

namespace skewmaps {

namespace {

json labels_of(const FiniteGroup& g, std::span<const Elem> xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(g.label(x));
  return out;
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidArgument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
  switch (g.tag().kind) {
    case GroupKind::dihedral: return {{"type", "dihedral"}, {"n", g.tag().param}};
    case GroupKind::swap_extension: return {{"type", "swap_extension"}, {"m", g.tag().param}};
    default: break;
  }
  json mul = json::array();
  for (Elem x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    mul.push_back(std::move(row));
  }
  json labels = json::array();
  for (Elem x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  return {{"type", "table"}, {"mul", std::move(mul)}, {"labels", std::move(labels)}};
}

GroupPtr group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw InvalidArgument("group descriptor needs a 'type'");
  const auto type = j.at("type").get<std::string>();
  if (type == "dihedral") return dihedral(require_int(j, "n"));
  if (type == "swap_extension") return swap_extension(require_int(j, "m"));
  if (type != "table") throw InvalidArgument("unknown group type '" + type + "'");
  const auto& mul = j.at("mul");
  const auto order = mul.size();
  std::vector<Elem> table;
  table.reserve(order * order);
  for (const auto& row : mul) {
    if (row.size() != order) throw InvalidArgument("multiplication table is not square");
    for (const auto& v : row) table.push_back(v.get<Elem>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != order) throw InvalidArgument("label count differs from the group order");
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

json elem_to_json(const FiniteGroup& g, Elem x) {
  if (g.is_dihedral()) return {{"j", g.rot(x)}, {"r", g.refl(x)}};
  return x;
}

Elem elem_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_object()) {
    if (!g.is_dihedral()) throw InvalidArgument("{j, r} elements need a dihedral group");
    const int r = require_int(j, "r");
    if (r != 0 && r != 1) throw InvalidArgument("field 'r' must be 0 or 1");
    return g.delem(require_int(j, "j"), r);
  }
  if (j.is_number_integer()) {
    const auto x = j.get<long long>();
    if (x < 0 || x >= g.order()) throw InvalidArgument("element index " + std::to_string(x) + " out of range");
    return static_cast<Elem>(x);
  }
  if (j.is_string()) {
    if (auto x = g.parse(j.get<std::string>())) return *x;
    throw InvalidArgument("cannot parse element '" + j.get<std::string>() + "'");
  }
  throw InvalidArgument("element must be an object, index or label");
}

json skew_to_json(const FiniteGroup& g, const SkewMorphism& s) {
  json psi = json::array();
  for (Elem x = 0; x < g.order(); ++x) psi.push_back(elem_to_json(g, s.psi(x)));
  return {{"psi", std::move(psi)}, {"order", s.order}, {"pi", s.pi}};
}

SkewMorphism skew_from_json(const FiniteGroup& g, const json& j) {
  const auto& arr = j.at("psi");
  if (arr.size() != static_cast<std::size_t>(g.order()))
    throw InvalidArgument("psi must list one image per group element");
  std::vector<Elem> img;
  for (const auto& e : arr) img.push_back(elem_from_json(g, e));
  auto s = check_skew(g, Perm(std::move(img)));
  if (!s) throw InvalidArgument("psi is not a skew-morphism");
  if (j.contains("order") && j.at("order").get<int>() != s->order)
    throw InvalidArgument("declared order differs from the order of psi");
  if (j.contains("pi") && j.at("pi").get<std::vector<int>>() != s->pi)
    throw InvalidArgument("declared power function differs from the computed one");
  return *s;
}

json map_to_json(const CayleyMap& m) {
  const auto& g = m.group();
  json xs = json::array(), ps = json::array();
  for (Elem x : m.generators()) xs.push_back(elem_to_json(g, x));
  for (Elem x : m.rotation()) ps.push_back(elem_to_json(g, x));
  return {{"group", group_to_json(g)}, {"X", std::move(xs)}, {"p", std::move(ps)}};
}

CayleyMap map_from_json(const json& j) {
  auto g = group_from_json(j.at("group"));
  std::vector<Elem> p;
  for (const auto& e : j.at("p")) p.push_back(elem_from_json(*g, e));
  if (!j.contains("X")) return CayleyMap(std::move(g), std::move(p));
  std::vector<Elem> xs;
  for (const auto& e : j.at("X")) xs.push_back(elem_from_json(*g, e));
  return CayleyMap(std::move(g), std::move(xs), std::move(p));
}

json analysis_to_json(const CayleyMap& m, const MapAnalysis& a) {
  const auto& g = m.group();
  json out = {{"map", describe(m)}, {"regular", a.regular}, {"chi", a.chi}};
  out["order"] = a.skew ? json(a.skew->order) : json(nullptr);
  out["kernel"] = labels_of(g, a.kernel.elements());
  out["skew_type"] = a.skew_type;
  out["balance"] = a.balance ? json(*a.balance) : json(nullptr);
  out["automorphisms"] = a.automorphisms;
  if (a.skew) out["skew"] = skew_to_json(g, *a.skew);
  return out;
}

json class_to_json(const MapClass& c) {
  const auto& g = c.representative.group();
  json out = {{"map", describe(c.representative)},
              {"rotation", labels_of(g, c.representative.rotation())},
              {"valence", c.representative.valence()},
              {"order", c.analysis.skew ? c.analysis.skew->order : 0},
              {"kernel", labels_of(g, c.analysis.kernel.elements())},
              {"skew_type", c.analysis.skew_type},
              {"balance", c.analysis.balance ? json(*c.analysis.balance) : json(nullptr)},
              {"automorphisms", c.analysis.automorphisms},
              {"mirror", c.mirror}};
  out["family"] = c.family ? json(to_string(*c.family)) : json(nullptr);
  return out;
}

json quotient_to_json(const QuotientMap& q, const QuotientReport& r) {
  return {{"quotient", describe(q.map)},
          {"rotation", labels_of(q.map.group(), q.map.rotation())},
          {"quotient_regular", r.quotient_regular},
          {"psi_order", r.psi_order},
          {"normal_order", r.normal_order},
          {"quotient_psi_order", r.quotient_psi_order},
          {"union_of_cosets", r.union_of_cosets},
          {"order_bound", r.order_bound},
          {"equality_rule", r.equality_rule},
          {"congruence", r.congruence},
          {"coset_action", r.coset_action},
          {"quotient_automorphisms", r.quotient_automorphisms},
          {"induced_action", r.induced_action},
          {"quotient_kernel", r.quotient_kernel},
          {"ok", r.ok()}};
}

json check_to_json(const std::string& title, const CheckLine& line) {
  return {{"check", title}, {"subject", line.subject}, {"pass", line.pass}, {"detail", line.detail}};
}

}  // namespace skewmaps
