#include "skewmaps/quotient.hpp"

#include <set>

#include "skewmaps/dart_map.hpp"

namespace skewmaps {

bool is_block_system(const CayleyMap& m, const Subgroup& n) {
  const auto s = associated_skew(m);
  if (!s) throw InvalidArgument("block system test needs a regular map");
  const FiniteGroup& g = m.group();
  if (!is_normal(g, n)) return false;
  const auto part = cosets(g, n, CosetSide::left);
  for (const auto& block : part.blocks) {
    const int target = part.block_of[s->psi(block.front())];
    for (Elem x : block)
      if (part.block_of[s->psi(x)] != target) return false;
  }
  return true;
}

QuotientMap quotient_map(const CayleyMap& m, const Subgroup& n) {
  if (!is_block_system(m, n)) throw InvalidArgument("cosets of N do not form a block system");
  for (Elem x : m.rotation())
    if (n.contains(x)) throw InvalidArgument("generating set meets N");
  FactorGroup f = factor_group(m.group(), n);
  const int k = f.group->order();
  std::vector<Elem> step(static_cast<std::size_t>(k), -1);
  for (Elem x : m.rotation()) {
    const Elem c = f.coset_of[x], d = f.coset_of[m.next(x)];
    if (step[c] >= 0 && step[c] != d) throw Error("quotient rotation is not well defined");
    step[c] = d;
  }
  std::vector<Elem> rotation;
  const Elem start = f.coset_of[m.rotation().front()];
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (Elem c = start; !seen[c]; c = step[c]) {
    seen[c] = 1;
    rotation.push_back(c);
  }
  std::size_t classes = 0;
  for (Elem c : step) classes += c >= 0;
  if (rotation.size() != classes) throw Error("quotient rotation is not a single cycle");
  CayleyMap qm(f.group, std::move(rotation));
  return {std::move(f), std::move(qm)};
}

QuotientReport verify_quotient_laws(const CayleyMap& m, const Subgroup& n) {
  QuotientReport r;
  const auto s = associated_skew(m);
  if (!s) return r;
  const auto q = quotient_map(m, n);
  const FiniteGroup& g = m.group();
  const FiniteGroup& h = *q.factor.group;
  const auto qs = associated_skew(q.map);
  const auto qs_route = construct_skew(q.map);
  r.quotient_regular = qs.has_value() && qs_route.has_value() && *qs == *qs_route;
  r.psi_order = s->order;
  r.normal_order = n.order();
  if (!qs) return r;
  r.quotient_psi_order = qs->order;
  r.union_of_cosets = true;
  for (Elem x = 0; x < g.order(); ++x)
    if (q.map.contains(q.factor.coset_of[x]) && !m.contains(x)) r.union_of_cosets = false;
  const int bound = r.normal_order * r.quotient_psi_order;
  r.order_bound = r.psi_order <= bound;
  r.equality_rule = (r.psi_order == bound) == r.union_of_cosets;
  r.congruence = true;
  r.coset_action = true;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem c = q.factor.coset_of[x];
    if ((qs->pi[c] - s->pi[x]) % qs->order != 0) r.congruence = false;
    if (qs->psi(c) != q.factor.coset_of[s->psi(x)]) r.coset_action = false;
  }
  r.quotient_automorphisms = automorphism_count(build_darts(q.map));
  const auto aut = map_automorphism_group(m);
  std::set<std::vector<Elem>> actions;
  std::vector<Elem> act(static_cast<std::size_t>(h.order()));
  for (const auto& p : aut.perms) {
    for (Elem c = 0; c < h.order(); ++c) act[c] = q.factor.coset_of[p(q.factor.representative[c])];
    actions.insert(act);
  }
  r.induced_action = static_cast<long long>(actions.size());
  r.quotient_kernel = kernel(h, *qs).order();
  return r;
}

}  // namespace skewmaps
