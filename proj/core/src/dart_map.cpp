#include "skewmaps/dart_map.hpp"

#include <map>

namespace skewmaps {

DartSystem build_darts(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  const int n = g.order();
  const int k = m.valence();
  std::vector<Elem> r(static_cast<std::size_t>(n) * k), t(r.size());
  for (Elem v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      const Elem x = m.rotation()[i];
      const int d = v * k + i;
      r[d] = v * k + (i + 1) % k;
      t[d] = g.mul(v, x) * k + m.position(g.inv(x));
    }
  }
  return {n, k, Perm(std::move(r)), Perm(std::move(t))};
}

std::optional<Perm> extend_automorphism(const DartSystem& ds, int d0, int d1) {
  const int total = ds.dart_count();
  std::vector<Elem> phi(static_cast<std::size_t>(total), -1);
  std::vector<char> hit(static_cast<std::size_t>(total), 0);
  std::vector<int> stack{d0};
  phi[d0] = d1;
  hit[d1] = 1;
  int assigned = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int e = phi[d];
    const std::pair<int, int> steps[2] = {{ds.rotation(d), ds.rotation(e)},
                                          {ds.reversal(d), ds.reversal(e)}};
    for (auto [nd, ne] : steps) {
      if (phi[nd] < 0) {
        if (hit[ne]) return std::nullopt;
        phi[nd] = ne;
        hit[ne] = 1;
        ++assigned;
        stack.push_back(nd);
      } else if (phi[nd] != ne) {
        return std::nullopt;
      }
    }
  }
  if (assigned != total) return std::nullopt;
  return Perm(std::move(phi));
}

long long automorphism_count(const DartSystem& ds) {
  long long count = 0;
  for (int d1 = 0; d1 < ds.dart_count(); ++d1)
    if (extend_automorphism(ds, 0, d1)) ++count;
  return count;
}

bool is_regular(const DartSystem& ds) {
  return extend_automorphism(ds, 0, ds.rotation(0)).has_value();
}

std::optional<Perm> vertex_action(const DartSystem& ds, const Perm& phi) {
  std::vector<Elem> img(static_cast<std::size_t>(ds.vertices));
  for (Elem v = 0; v < ds.vertices; ++v) {
    img[v] = ds.tail(phi(ds.dart(v, 0)));
    for (int i = 1; i < ds.valence; ++i)
      if (ds.tail(phi(ds.dart(v, i))) != img[v]) return std::nullopt;
  }
  if (!is_bijection(img)) return std::nullopt;
  return Perm(std::move(img));
}

std::optional<SkewMorphism> stabilizer_skew(const DartSystem& ds, const CayleyMap& m) {
  const auto phi = extend_automorphism(ds, 0, ds.rotation(0));
  if (!phi) return std::nullopt;
  const auto v = vertex_action(ds, *phi);
  if (!v) throw std::logic_error("map automorphism does not act on vertices");
  return check_skew(m.group(), *v);
}

std::string rotation_system_text(const DartSystem& ds, const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  std::string out;
  for (Elem v = 0; v < ds.vertices; ++v) {
    out += g.label(v) + ":";
    for (int i = 0; i < ds.valence; ++i) out += " " + g.label(g.mul(v, m.rotation()[i]));
    out += "\n";
  }
  return out;
}

Subgroup MapAutomorphismGroup::left_of(std::span<const Elem> members) const {
  std::vector<Elem> idx;
  for (Elem x : members) idx.push_back(left[x]);
  std::sort(idx.begin(), idx.end());
  return Subgroup(std::move(idx));
}

MapAutomorphismGroup map_automorphism_group(const CayleyMap& m, int bound) {
  const auto s = associated_skew(m);
  if (!s) throw InvalidArgument("automorphism group table needs a regular map");
  const FiniteGroup& g = m.group();
  const int n = g.order();
  const int size = n * s->order;
  if (size > bound) throw CapacityError("map automorphism group", size, bound);

  MapAutomorphismGroup out;
  std::map<std::vector<Elem>, Elem> index;
  std::vector<std::string> labels;
  std::vector<Perm> powers{Perm::identity(n)};
  for (int i = 1; i < s->order; ++i) powers.push_back(s->psi * powers.back());
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> left(static_cast<std::size_t>(n));
    for (Elem h = 0; h < n; ++h) left[h] = g.mul(x, h);
    const Perm lx(std::move(left));
    for (int i = 0; i < s->order; ++i) {
      Perm p = lx * powers[i];
      const auto [it, fresh] =
          index.emplace(std::vector<Elem>(p.images().begin(), p.images().end()),
                        static_cast<Elem>(out.perms.size()));
      if (!fresh) throw std::logic_error("repeated element L_g psi^i");
      std::string label = "L(" + g.label(x) + ")";
      if (i == 1) label += "psi";
      if (i > 1) label += "psi^" + std::to_string(i);
      labels.push_back(x == kIdentity && i == 0 ? "1" : label);
      out.perms.push_back(std::move(p));
    }
  }
  std::vector<Elem> table(static_cast<std::size_t>(size) * size);
  for (int u = 0; u < size; ++u) {
    for (int v = 0; v < size; ++v) {
      const Perm w = out.perms[u] * out.perms[v];
      const auto it = index.find(std::vector<Elem>(w.images().begin(), w.images().end()));
      if (it == index.end()) throw std::logic_error("L(G)<psi> is not closed under composition");
      table[static_cast<std::size_t>(u) * size + v] = it->second;
    }
  }
  out.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels)));
  for (Elem x = 0; x < n; ++x) out.left.push_back(x * s->order);
  out.psi = s->order > 1 ? 1 : 0;
  return out;
}

Subgroup rotation_core(const CayleyMap& m, const MapAutomorphismGroup& aut) {
  const FiniteGroup& g = m.group();
  const int n = g.dihedral_n();
  std::vector<Elem> rot;
  for (int j = 0; j < n; ++j) rot.push_back(g.delem(j, 0));
  const Subgroup core = core_of(*aut.group, aut.left_of(rot));
  std::vector<Elem> members;
  for (int j = 0; j < n; ++j)
    if (core.contains(aut.left[g.delem(j, 0)])) members.push_back(g.delem(j, 0));
  return Subgroup(std::move(members));
}

}  // namespace skewmaps
