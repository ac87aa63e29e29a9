#include "skewmaps/quadruple.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewmaps {

std::string axiom_name(QuadrupleAxiom a) {
  switch (a) {
    case QuadrupleAxiom::h_not_subgroup: return "H is not a subgroup";
    case QuadrupleAxiom::y_identity: return "y is the identity";
    case QuadrupleAxiom::h_trivial: return "H is trivial";
    case QuadrupleAxiom::intersection_nontrivial: return "H and <y> meet nontrivially";
    case QuadrupleAxiom::not_factorization: return "G != H<y>";
    case QuadrupleAxiom::y_not_core_free: return "<y> is not core-free";
    case QuadrupleAxiom::not_generating: return "G != <y, x>";
    case QuadrupleAxiom::double_coset_asymmetric: return "YxY != Yx^-1Y";
  }
  return "unknown axiom";
}

std::vector<Elem> double_coset(const FiniteGroup& g, const Subgroup& y, Elem x) {
  std::vector<Elem> out;
  for (Elem u : y.elements())
    for (Elem v : y.elements()) out.push_back(g.mul(g.mul(u, x), v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Admissibility check_admissible(GroupPtr gp, const Subgroup& h, Elem x, Elem y) {
  const FiniteGroup& g = *gp;
  auto fail = [](QuadrupleAxiom a) { return Admissibility{std::nullopt, a}; };
  if (!is_subgroup(g, h.elements())) return fail(QuadrupleAxiom::h_not_subgroup);
  if (y == kIdentity) return fail(QuadrupleAxiom::y_identity);
  if (h.is_trivial()) return fail(QuadrupleAxiom::h_trivial);
  const Elem ys[] = {y};
  const Subgroup yg = subgroup_generated(g, ys);
  if (intersection(h, yg).order() != 1) return fail(QuadrupleAxiom::intersection_nontrivial);
  if (h.order() * yg.order() != g.order()) return fail(QuadrupleAxiom::not_factorization);
  if (core_of(g, yg).order() != 1) return fail(QuadrupleAxiom::y_not_core_free);
  const Elem gens[] = {y, x};
  if (subgroup_generated(g, gens).order() != g.order()) return fail(QuadrupleAxiom::not_generating);
  if (double_coset(g, yg, x) != double_coset(g, yg, g.inv(x)))
    return fail(QuadrupleAxiom::double_coset_asymmetric);
  return {AdmissibleQuadruple{std::move(gp), h, x, y, yg}, std::nullopt};
}

namespace {

// For every g the unique h in H with hY = gY.
std::vector<Elem> coset_representatives(const AdmissibleQuadruple& q) {
  const FiniteGroup& g = *q.group;
  std::vector<Elem> rep(static_cast<std::size_t>(g.order()), -1);
  for (Elem h : q.h.elements())
    for (Elem u : q.y_group.elements()) {
      Elem& slot = rep[g.mul(h, u)];
      if (slot >= 0) throw std::logic_error("coset of Y with two representatives in H");
      slot = h;
    }
  return rep;
}

}  // namespace

InducedMap induced_cayley_map(const AdmissibleQuadruple& q) {
  const FiniteGroup& g = *q.group;
  const auto rep = coset_representatives(q);
  const auto yxy = double_coset(g, q.y_group, q.x);
  std::vector<Elem> xs;
  for (Elem h : q.h.elements())
    if (std::binary_search(yxy.begin(), yxy.end(), h)) xs.push_back(h);

  auto sub = subgroup_as_group(g, q.h);
  std::vector<Elem> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.embed.size(); ++i) index[sub.embed[i]] = static_cast<Elem>(i);

  std::vector<Elem> rotation;
  const Elem start = rep[q.x];
  Elem cur = start;
  do {
    rotation.push_back(cur);
    cur = rep[g.mul(q.y, cur)];
  } while (cur != start && rotation.size() <= xs.size());
  auto sorted = rotation;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != xs) throw std::logic_error("orbit of x under y does not cover X");

  std::vector<Elem> local;
  for (Elem v : rotation) local.push_back(index[v]);
  std::vector<Elem> action(sub.embed.size());
  for (std::size_t i = 0; i < sub.embed.size(); ++i) action[i] = index[rep[g.mul(q.y, sub.embed[i])]];
  CayleyMap m(sub.group, std::move(local));
  const auto ds = build_darts(m);
  if (ds.dart_count() != g.order() || automorphism_count(ds) != ds.dart_count())
    throw std::logic_error("induced map is not regular with |G| automorphisms");
  return {std::move(sub), std::move(m), Perm(std::move(action))};
}

RegularQuadruple from_regular_map(const CayleyMap& m, int bound) {
  auto aut = map_automorphism_group(m, bound);
  std::vector<Elem> all(static_cast<std::size_t>(m.group().order()));
  for (Elem x = 0; x < m.group().order(); ++x) all[x] = x;
  auto res = check_admissible(aut.group, aut.left_of(all), aut.left[m.rotation().front()], aut.psi);
  if (!res.quadruple)
    throw std::logic_error("quadruple of a regular map is not admissible: " + axiom_name(*res.violated));
  return {std::move(aut), std::move(*res.quadruple)};
}

AdmissibleQuadruple conjugate_quadruple(const AdmissibleQuadruple& q, std::span<const Elem> alpha) {
  std::vector<Elem> h;
  for (Elem v : q.h.elements()) h.push_back(alpha[v]);
  std::sort(h.begin(), h.end());
  auto res = check_admissible(q.group, Subgroup(std::move(h)), alpha[q.x], alpha[q.y]);
  if (!res.quadruple) throw std::logic_error("conjugated quadruple is not admissible");
  return std::move(*res.quadruple);
}

SimpleGraph coset_graph(const FiniteGroup& g, const Subgroup& y, Elem x) {
  const auto yxy = double_coset(g, y, x);
  if (yxy != double_coset(g, y, g.inv(x))) throw InvalidArgument("double coset YxY is not symmetric");
  const auto part = cosets(g, y, CosetSide::left);
  const int k = static_cast<int>(part.blocks.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Elem d = g.mul(g.inv(part.blocks[i].front()), part.blocks[j].front());
      if (std::binary_search(yxy.begin(), yxy.end(), d)) edges.emplace_back(i, j);
    }
  return graph_from_edges(k, edges);
}

AdmissibleQuadruple swap_quadruple(int m, int ell) {
  const auto g = swap_extension(m);
  const auto dm = dihedral(m);
  const Elem r = dm->delem(0, 1), c_ell = dm->delem(ell, 0);
  std::vector<Elem> h;
  for (Elem d = 0; d < dm->order(); ++d)
    for (Elem e : {kIdentity, r}) h.push_back(swap_elem(m, d, e, 0));
  std::sort(h.begin(), h.end());
  auto res = check_admissible(g, Subgroup(std::move(h)), swap_elem(m, r, kIdentity, 0),
                              swap_elem(m, c_ell, c_ell, 1));
  if (!res.quadruple)
    throw InvalidArgument("swap quadruple is not admissible: " + axiom_name(*res.violated));
  return std::move(*res.quadruple);
}

std::vector<Elem> swap_dihedral_embedding(int m) {
  const auto g = swap_extension(m);
  const auto dm = dihedral(m);
  const auto dn = dihedral(2 * m);
  const Elem a = swap_elem(m, dm->delem(1, 0), dm->delem(0, 1), 0);
  const Elem b = swap_elem(m, dm->delem(0, 1), kIdentity, 0);
  std::vector<Elem> out(static_cast<std::size_t>(dn->order()));
  for (Elem x = 0; x < dn->order(); ++x)
    out[x] = g->mul(g->power(a, dn->rot(x)), dn->refl(x) ? b : kIdentity);
  return out;
}

}  // namespace skewmaps
