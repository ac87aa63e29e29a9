#include "skewmaps/cayley_map.hpp"

#include <algorithm>
#include <deque>

#include "skewmaps/dart_map.hpp"

namespace skewmaps {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

CayleyMap::CayleyMap(GroupPtr g, std::vector<Elem> generators, std::vector<Elem> rotation)
    : group_(std::move(g)), rotation_(std::move(rotation)) {
  if (!group_) throw InvalidArgument("Cayley map needs a group");
  const FiniteGroup& grp = *group_;
  const int n = grp.order();
  for (Elem x : generators)
    if (x < 0 || x >= n) throw InvalidArgument("generator index out of range");
  for (Elem x : rotation_)
    if (x < 0 || x >= n) throw InvalidArgument("rotation entry out of range");
  const auto xs = sorted_unique(generators);
  if (xs.size() != generators.size())
    throw MapError(MapErrorKind::not_a_cycle, "generating set lists an element twice");
  if (std::binary_search(xs.begin(), xs.end(), kIdentity))
    throw MapError(MapErrorKind::contains_identity, "generating set contains the identity");
  for (Elem x : xs)
    if (!std::binary_search(xs.begin(), xs.end(), grp.inv(x)))
      throw MapError(MapErrorKind::not_inverse_closed,
                     "generating set is not closed under inverses (" + grp.label(x) + ")");
  if (subgroup_generated(grp, xs).order() != n)
    throw MapError(MapErrorKind::not_generating, "set does not generate the group");
  if (sorted_unique(rotation_) != xs || rotation_.size() != xs.size())
    throw MapError(MapErrorKind::not_a_cycle, "rotation is not a single cycle on the generating set");
  pos_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < rotation_.size(); ++i) pos_[rotation_[i]] = static_cast<int>(i);
}

CayleyMap::CayleyMap(GroupPtr g, std::vector<Elem> rotation)
    : CayleyMap(std::move(g), rotation, rotation) {}

std::vector<Elem> CayleyMap::generators() const { return sorted_unique(rotation_); }

Elem CayleyMap::rotate(Elem x, long long k) const {
  const long long n = valence();
  long long i = (pos_[x] + k) % n;
  if (i < 0) i += n;
  return rotation_[static_cast<std::size_t>(i)];
}

int chi(const CayleyMap& m, Elem x) {
  if (!m.contains(x)) throw InvalidArgument("chi is defined on the generating set only");
  const int k = m.valence();
  const int d = m.position(m.group().inv(x)) - m.position(x);
  return ((d % k) + k) % k;
}

namespace {

std::vector<int> chi_formula(const CayleyMap& m) {
  const int k = m.valence();
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Elem x = m.rotation()[i];
    const int v = (chi(m, m.next(x)) - chi(m, x) + 1) % k;
    out[i] = v <= 0 ? v + k : v;
  }
  return out;
}

}  // namespace

std::vector<int> power_on_X(const CayleyMap& m) {
  if (!is_regular(m)) throw InvalidArgument("power function on X needs a regular map");
  return chi_formula(m);
}

std::optional<SkewMorphism> construct_skew(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  const int n = g.order();
  const int k = m.valence();
  const auto pi_x = chi_formula(m);
  std::vector<Elem> psi(static_cast<std::size_t>(n), -1);
  std::vector<int> pi(static_cast<std::size_t>(n), 0);
  psi[kIdentity] = kIdentity;
  pi[kIdentity] = 1;
  std::deque<Elem> queue{kIdentity};
  while (!queue.empty()) {
    const Elem u = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      const Elem x = m.rotation()[i];
      const Elem v = g.mul(u, x);
      const Elem image = g.mul(psi[u], m.rotate(x, pi[u]));
      long long sum = 0;
      for (int j = 0; j < pi[u]; ++j) sum += pi_x[m.position(m.rotate(x, j))];
      const int value = static_cast<int>((sum - 1) % k) + 1;
      if (psi[v] < 0) {
        psi[v] = image;
        pi[v] = value;
        queue.push_back(v);
      } else if (psi[v] != image || pi[v] != value) {
        return std::nullopt;
      }
    }
  }
  if (!is_bijection(psi)) return std::nullopt;
  auto s = check_skew(g, Perm(psi));
  if (!s || s->order != k || s->pi != pi) return std::nullopt;
  return s;
}

std::optional<SkewMorphism> associated_skew(const CayleyMap& m) {
  const auto ds = build_darts(m);
  auto s = stabilizer_skew(ds, m);
  if (!s || s->order != m.valence()) return std::nullopt;
  for (Elem x : m.rotation())
    if (s->psi(x) != m.next(x)) return std::nullopt;
  return s;
}

bool is_regular(const CayleyMap& m) { return is_regular(build_darts(m)); }

MapAnalysis analyze(const CayleyMap& m) {
  MapAnalysis a;
  const auto ds = build_darts(m);
  a.automorphisms = automorphism_count(ds);
  for (Elem x : m.rotation()) a.chi.push_back(chi(m, x));
  a.balance = t_balance(m);
  if (a.automorphisms == ds.dart_count()) {
    a.skew = associated_skew(m);
    if (!a.skew) throw std::logic_error("regular map without an associated skew-morphism");
    a.regular = true;
    a.kernel = kernel(m.group(), *a.skew);
    a.skew_type = m.group().order() / a.kernel.order();
  }
  return a;
}

std::optional<int> t_balance(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  for (int t = 1; t <= m.valence(); ++t) {
    bool ok = true;
    for (Elem x : m.rotation()) {
      if (g.inv(m.next(x)) != m.rotate(g.inv(x), t)) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> equivalent(const CayleyMap& m1, const CayleyMap& m2) {
  if (m1.valence() != m2.valence() || m1.group().order() != m2.group().order()) return std::nullopt;
  const int k = m1.valence();
  std::vector<Elem> images(static_cast<std::size_t>(k));
  for (int shift = 0; shift < k; ++shift) {
    for (int i = 0; i < k; ++i) images[i] = m2.rotation()[(shift + i) % k];
    if (auto phi = extend_homomorphism(m1.group(), m2.group(), m1.rotation(), images)) return phi;
  }
  return std::nullopt;
}

CayleyMap mirror(const CayleyMap& m) {
  std::vector<Elem> rev(m.rotation().rbegin(), m.rotation().rend());
  return CayleyMap(m.group_ptr(), std::move(rev));
}

std::optional<std::vector<Elem>> reflection_equivalent(const CayleyMap& m1, const CayleyMap& m2) {
  return equivalent(m1, mirror(m2));
}

CayleyMap transport(const CayleyMap& m, std::span<const Elem> phi, GroupPtr target) {
  std::vector<Elem> rot;
  for (Elem x : m.rotation()) rot.push_back(phi[x]);
  return CayleyMap(std::move(target), std::move(rot));
}

bool kernel_conjugation_check(const CayleyMap& m) {
  const auto s = associated_skew(m);
  if (!s) throw InvalidArgument("kernel conjugation check needs a regular map");
  const FiniteGroup& g = m.group();
  const int n = g.order();
  const Perm psi_inv = s->psi.inverse();
  for (Elem x = 0; x < n; ++x) {
    // c = psi L_x psi^-1 lies in L(G) iff c(h) = c(1) h for every h.
    const Elem c1 = s->psi(g.mul(x, psi_inv(kIdentity)));
    bool left = true;
    for (Elem h = 0; h < n && left; ++h) left = s->psi(g.mul(x, psi_inv(h))) == g.mul(c1, h);
    if (left != (s->pi[x] == 1)) return false;
  }
  return true;
}

std::vector<Elem> normalized_rotation(std::span<const Elem> rotation) {
  const auto it = std::min_element(rotation.begin(), rotation.end());
  std::vector<Elem> out(it, rotation.end());
  out.insert(out.end(), rotation.begin(), it);
  return out;
}

std::vector<Elem> canonical_key(const CayleyMap& m, const std::vector<Perm>& autos) {
  std::vector<Elem> best = normalized_rotation(m.rotation());
  std::vector<Elem> img(m.rotation().size());
  for (const auto& a : autos) {
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(m.rotation()[i]);
    auto key = normalized_rotation(img);
    if (key < best) best = std::move(key);
  }
  return best;
}

std::string describe(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  std::string out = "CM(";
  out += g.is_dihedral() ? "D_" + std::to_string(g.dihedral_n()) : "G" + std::to_string(g.order());
  out += ", (";
  for (std::size_t i = 0; i < m.rotation().size(); ++i) {
    if (i) out += ", ";
    out += g.label(m.rotation()[i]);
  }
  return out + "))";
}

}  // namespace skewmaps
