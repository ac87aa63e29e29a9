#include "skewmaps/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "skewmaps/error.hpp"

namespace skewmaps {

namespace {

int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) out.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  return out;
}

}  // namespace

std::string dihedral_label(int n, int j, int r) {
  j = mod(j, n);
  std::string s;
  if (j == 1)
    s = "a";
  else if (j > 1)
    s = "a^" + std::to_string(j);
  if (r) s += "b";
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<Elem> table, std::vector<std::string> labels, GroupTag tag,
                         NoCheck)
    : table_(std::move(table)), labels_(std::move(labels)), tag_(tag) {
  const auto n = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(table_.size()))));
  if (n <= 0 || n * n != static_cast<long long>(table_.size()))
    throw InvalidArgument("multiplication table is not square");
  order_ = static_cast<int>(n);
  if (labels_.empty()) labels_ = default_labels(order_);
  if (static_cast<int>(labels_.size()) != order_)
    throw InvalidArgument("label count does not match group order");
  for (Elem e : table_)
    if (e < 0 || e >= order_) throw InvalidArgument("table entry out of range");
  for (Elem g = 0; g < order_; ++g)
    if (mul(0, g) != g || mul(g, 0) != g)
      throw InvalidArgument("element 0 is not a two-sided identity");
  init_inverses();
}

FiniteGroup::FiniteGroup(std::vector<Elem> table, std::vector<std::string> labels, GroupTag tag)
    : FiniteGroup(std::move(table), std::move(labels), tag, NoCheck{}) {
  if (!verify_axioms()) throw InvalidArgument("table does not define a group");
}

FiniteGroup FiniteGroup::trusted(std::vector<Elem> table, std::vector<std::string> labels,
                                 GroupTag tag) {
  return FiniteGroup(std::move(table), std::move(labels), tag, NoCheck{});
}

void FiniteGroup::init_inverses() {
  inv_.assign(static_cast<std::size_t>(order_), -1);
  for (Elem g = 0; g < order_; ++g) {
    for (Elem h = 0; h < order_; ++h) {
      if (mul(g, h) == kIdentity) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0) throw InvalidArgument("element without inverse");
  }
}

bool FiniteGroup::verify_axioms() const {
  std::vector<char> seen(static_cast<std::size_t>(order_));
  for (Elem g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem h = 0; h < order_; ++h) seen[mul(g, h)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem h = 0; h < order_; ++h) seen[mul(h, g)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  for (Elem g = 0; g < order_; ++g)
    if (mul(g, inv(g)) != kIdentity || mul(inv(g), g) != kIdentity) return false;
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y) {
      const Elem xy = mul(x, y);
      for (Elem z = 0; z < order_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  return true;
}

Elem FiniteGroup::power(Elem g, long long k) const {
  const int ord = element_order(g);
  k %= ord;
  if (k < 0) k += ord;
  Elem out = kIdentity;
  for (long long i = 0; i < k; ++i) out = mul(out, g);
  return out;
}

int FiniteGroup::element_order(Elem g) const {
  int k = 1;
  for (Elem x = g; x != kIdentity; x = mul(x, g)) ++k;
  return k;
}

int FiniteGroup::dihedral_n() const {
  if (!is_dihedral()) throw InvalidArgument("group is not tagged dihedral");
  return tag_.param;
}

Elem FiniteGroup::delem(int j, int r) const {
  const int n = dihedral_n();
  return static_cast<Elem>(mod(j, n) + n * (r & 1));
}

int FiniteGroup::rot(Elem g) const { return g % dihedral_n(); }
int FiniteGroup::refl(Elem g) const { return g / dihedral_n(); }

std::optional<Elem> FiniteGroup::parse(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  for (Elem g = 0; g < order_; ++g)
    if (labels_[g] == text) return g;
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int idx = -1;
    std::from_chars(text.data(), text.data() + text.size(), idx);
    if (idx >= 0 && idx < order_) return idx;
    return std::nullopt;
  }
  if (!is_dihedral()) return std::nullopt;
  Elem acc = kIdentity;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '*' || c == ' ' || c == '.') {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'b') return std::nullopt;
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const auto* first = text.data() + i + (text[i] == '+' ? 1 : 0);
      auto res = std::from_chars(first, text.data() + j, exp);
      if (res.ec != std::errc{} || res.ptr != text.data() + j) return std::nullopt;
      i = j;
    }
    acc = mul(acc, power(c == 'a' ? delem(1, 0) : delem(0, 1), exp));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

// ---------------------------------------------------------------------------
// Constructors

GroupPtr dihedral(int n) {
  if (n < 2) throw InvalidArgument("dihedral group needs n >= 2, got " + std::to_string(n));
  const int order = 2 * n;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) labels.push_back(dihedral_label(n, x % n, x / n));
  for (int x = 0; x < order; ++x) {
    const int j = x % n, r = x / n;
    for (int y = 0; y < order; ++y) {
      const int k = y % n, s = y / n;
      table[static_cast<std::size_t>(x) * order + y] = mod(r ? j - k : j + k, n) + n * (r ^ s);
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels), {GroupKind::dihedral, n}));
}

GroupPtr cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back(x == 0 ? "1" : x == 1 ? "c" : "c^" + std::to_string(x));
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels), {GroupKind::cyclic, n}));
}

GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order(), n2 = g2.order(), order = n1 * n2;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    labels.push_back("(" + g1.label(x / n2) + "," + g2.label(x % n2) + ")");
    for (int y = 0; y < order; ++y)
      table[static_cast<std::size_t>(x) * order + y] =
          g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2);
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels), {GroupKind::product, 0}));
}

Elem swap_elem(int m, Elem d1, Elem d2, int s) {
  const int q = 2 * m;
  return d1 * q + d2 + (s & 1) * q * q;
}

GroupPtr swap_extension(int m) {
  if (m < 3 || m % 2 == 0)
    throw InvalidArgument("swap extension needs odd m >= 3, got " + std::to_string(m));
  const auto dm = dihedral(m);
  const int q = 2 * m, q2 = q * q, order = 2 * q2;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int s = x / q2, d1 = (x % q2) / q, d2 = x % q;
    if (x == 0)
      labels.emplace_back("1");
    else
      labels.push_back("(" + dm->label(d1) + "," + dm->label(d2) + ")" + (s ? "s" : ""));
  }
  for (int x = 0; x < order; ++x) {
    const int s = x / q2, d1 = (x % q2) / q, d2 = x % q;
    for (int y = 0; y < order; ++y) {
      const int t = y / q2;
      int e1 = (y % q2) / q, e2 = y % q;
      if (s) std::swap(e1, e2);
      table[static_cast<std::size_t>(x) * order + y] =
          swap_elem(m, dm->mul(d1, e1), dm->mul(d2, e2), s ^ t);
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels), {GroupKind::swap_extension, m}));
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

CyclicPart cyclic_part(const FiniteGroup& g) {
  const int n = g.dihedral_n();
  std::vector<Elem> members;
  for (int j = 0; j < n; ++j) members.push_back(g.delem(j, 0));
  return {Subgroup(std::move(members)), n > 2};
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Elem> members{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      const Elem x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  return Subgroup(std::move(members));
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> members) {
  const Subgroup h(std::vector<Elem>(members.begin(), members.end()));
  if (!h.contains(kIdentity)) return false;
  for (Elem x : h.elements())
    for (Elem y : h.elements())
      if (!h.contains(g.mul(x, y))) return false;
  return true;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by) {
  std::vector<Elem> out;
  out.reserve(h.elements().size());
  const Elem inv = g.inv(by);
  for (Elem x : h.elements()) out.push_back(g.mul(g.mul(by, x), inv));
  return Subgroup(std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem by : generating_set(g)) {
    const Elem inv = g.inv(by);
    for (Elem x : h.elements())
      if (!h.contains(g.mul(g.mul(by, x), inv))) return false;
  }
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup(std::move(out));
}

Subgroup core_of(const FiniteGroup& g, const Subgroup& h) {
  Subgroup acc = h;
  // Conjugates by elements of one left coset of H coincide, so one
  // representative per coset suffices.
  const auto parts = cosets(g, h, CosetSide::left);
  for (const auto& block : parts.blocks) {
    acc = intersection(acc, conjugate(g, h, block.front()));
    if (acc.is_trivial()) break;
  }
  return acc;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

CosetPartition cosets(const FiniteGroup& g, const Subgroup& h, CosetSide side) {
  CosetPartition part;
  part.side = side;
  part.block_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (part.block_of[x] >= 0) continue;
    std::vector<Elem> block;
    for (Elem y : h.elements()) block.push_back(side == CosetSide::left ? g.mul(x, y) : g.mul(y, x));
    std::sort(block.begin(), block.end());
    const int id = static_cast<int>(part.blocks.size());
    for (Elem y : block) part.block_of[y] = id;
    part.blocks.push_back(std::move(block));
  }
  return part;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound) {
  if (g.order() > bound) throw CapacityError("subgroup enumeration", g.order(), bound);
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclics;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem gens[] = {x};
    auto c = subgroup_generated(g, gens);
    if (found.insert(c).second) cyclics.push_back(c);
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclics) {
        std::vector<Elem> gens = s.elements();
        gens.insert(gens.end(), c.elements().begin(), c.elements().end());
        auto j = subgroup_generated(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ord(order.size());
  for (Elem x : order) ord[x] = g.element_order(x);
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return ord[x] > ord[y]; });
  std::vector<Elem> gens;
  Subgroup span = subgroup_generated(g, gens);
  for (Elem x : order) {
    if (span.order() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Homomorphisms

std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images) {
  std::vector<Elem> phi(static_cast<std::size_t>(g1.order()), -1);
  std::vector<Elem> queue{kIdentity};
  phi[kIdentity] = kIdentity;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem u = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem v = g1.mul(u, gens[i]);
      const Elem w = g2.mul(phi[u], images[i]);
      if (phi[v] < 0) {
        phi[v] = w;
        queue.push_back(v);
      } else if (phi[v] != w) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != g1.order()) return std::nullopt;
  std::vector<char> hit(static_cast<std::size_t>(g2.order()), 0);
  for (Elem y : phi) {
    if (hit[y]) return std::nullopt;
    hit[y] = 1;
  }
  return phi;
}

bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, std::span<const Elem> phi) {
  if (g1.order() != g2.order() || static_cast<int>(phi.size()) != g1.order()) return false;
  std::vector<char> hit(static_cast<std::size_t>(g2.order()), 0);
  for (Elem y : phi) {
    if (y < 0 || y >= g2.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Elem x = 0; x < g1.order(); ++x)
    for (Elem y = 0; y < g1.order(); ++y)
      if (phi[g1.mul(x, y)] != g2.mul(phi[x], phi[y])) return false;
  return true;
}

namespace {

// Backtracks over images of a generating set of g1, matching element orders.
// The visitor returns false to stop the search.
template <typename Visit>
void search_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2, Visit&& visit) {
  if (g1.order() != g2.order()) return;
  const auto gens = generating_set(g1);
  std::vector<int> ord2(static_cast<std::size_t>(g2.order()));
  std::vector<int> count1(static_cast<std::size_t>(g1.order()) + 1, 0), count2 = count1;
  for (Elem y = 0; y < g2.order(); ++y) ++count2[ord2[y] = g2.element_order(y)];
  for (Elem x = 0; x < g1.order(); ++x) ++count1[g1.element_order(x)];
  if (count1 != count2) return;
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    const int o = g1.element_order(s);
    std::vector<Elem> c;
    for (Elem y = 0; y < g2.order(); ++y)
      if (ord2[y] == o) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<Elem> images(gens.size());
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (auto phi = extend_homomorphism(g1, g2, gens, images))
        if (!visit(std::move(*phi))) stop = true;
      return;
    }
    for (Elem y : candidates[depth]) {
      images[depth] = y;
      self(self, depth + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<Elem>> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                int bound) {
  if (g1.order() > bound) throw CapacityError("isomorphism search", g1.order(), bound);
  std::vector<std::vector<Elem>> out;
  search_isomorphisms(g1, g2, [&](std::vector<Elem> phi) {
    out.push_back(std::move(phi));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                             int bound) {
  if (g1.order() > bound) throw CapacityError("isomorphism search", g1.order(), bound);
  std::optional<std::vector<Elem>> found;
  search_isomorphisms(g1, g2, [&](std::vector<Elem> phi) {
    found = std::move(phi);
    return false;
  });
  return found;
}

std::vector<Elem> random_automorphism(const FiniteGroup& g, std::mt19937_64& rng) {
  const auto gens = generating_set(g);
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    std::vector<Elem> c;
    for (Elem y = 0; y < g.order(); ++y)
      if (g.element_order(y) == g.element_order(s)) c.push_back(y);
    std::shuffle(c.begin(), c.end(), rng);
    candidates.push_back(std::move(c));
  }
  std::vector<Elem> images(gens.size());
  std::optional<std::vector<Elem>> found;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      found = extend_homomorphism(g, g, gens, images);
      return;
    }
    for (Elem y : candidates[depth]) {
      // Products of pairs of generators must keep their orders.
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j)
        ok = g.element_order(g.mul(images[j], y)) == g.element_order(g.mul(gens[j], gens[depth]));
      if (!ok) continue;
      images[depth] = y;
      self(self, depth + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  if (!found) throw std::logic_error("no automorphism found");
  return *found;
}

std::vector<Perm> automorphisms_generic(const FiniteGroup& g, int bound) {
  std::vector<Perm> out;
  for (auto& phi : all_isomorphisms(g, g, bound)) out.emplace_back(std::move(phi));
  return out;
}

std::vector<Perm> dihedral_automorphisms(const FiniteGroup& g) {
  const int n = g.dihedral_n();
  if (n <= 2) throw InvalidArgument("closed-form dihedral automorphisms need n > 2");
  std::vector<Perm> out;
  for (int s = 1; s < n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    for (int t = 0; t < n; ++t) {
      std::vector<Elem> img(static_cast<std::size_t>(g.order()));
      for (Elem x = 0; x < g.order(); ++x) {
        const int j = g.rot(x), r = g.refl(x);
        img[x] = g.delem(s * j + t * r, r);
      }
      out.emplace_back(std::move(img));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> automorphisms(const FiniteGroup& g, int bound) {
  if (g.is_dihedral() && g.dihedral_n() > 2) return dihedral_automorphisms(g);
  return automorphisms_generic(g, bound);
}

// ---------------------------------------------------------------------------
// Factor groups and subgroup materialization

std::optional<std::vector<Elem>> find_dihedral_presentation(const FiniteGroup& g) {
  if (g.order() % 2 != 0 || g.order() < 4) return std::nullopt;
  const int k = g.order() / 2;
  const auto dk = dihedral(k);
  for (Elem a = 1; a < g.order(); ++a) {
    if (g.element_order(a) != k) continue;
    const Elem agen[] = {a};
    const auto ca = subgroup_generated(g, agen);
    for (Elem b = 1; b < g.order(); ++b) {
      if (ca.contains(b) || g.element_order(b) != 2) continue;
      if (g.mul(g.mul(b, a), b) != g.inv(a)) continue;
      std::vector<Elem> phi(static_cast<std::size_t>(g.order()));
      for (Elem x = 0; x < g.order(); ++x)
        phi[x] = g.mul(g.power(a, dk->rot(x)), dk->refl(x) ? b : kIdentity);
      if (is_isomorphism(*dk, g, phi)) return phi;
    }
  }
  return std::nullopt;
}

FactorGroup factor_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InvalidArgument("factor group needs a normal subgroup");
  const auto part = cosets(g, n, CosetSide::left);
  const int k = static_cast<int>(part.blocks.size());
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels;
  for (int x = 0; x < k; ++x) {
    labels.push_back(x == 0 ? "1" : "[" + g.label(part.blocks[x].front()) + "]");
    for (int y = 0; y < k; ++y)
      table[static_cast<std::size_t>(x) * k + y] =
          part.block_of[g.mul(part.blocks[x].front(), part.blocks[y].front())];
  }
  FactorGroup out;
  out.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::trusted(std::move(table), std::move(labels)));
  out.coset_of.assign(part.block_of.begin(), part.block_of.end());
  for (const auto& block : part.blocks) out.representative.push_back(block.front());

  // Prefer the images of a and b when the parent is dihedral.
  std::optional<std::vector<Elem>> phi;
  if (g.is_dihedral() && k >= 4) {
    const auto dk = dihedral(k / 2);
    const Elem a = out.coset_of[g.delem(1, 0)], b = out.coset_of[g.delem(0, 1)];
    std::vector<Elem> map(static_cast<std::size_t>(k));
    for (Elem x = 0; x < k; ++x)
      map[x] = out.group->mul(out.group->power(a, dk->rot(x)), dk->refl(x) ? b : kIdentity);
    if (is_isomorphism(*dk, *out.group, map)) phi = std::move(map);
  }
  if (!phi) phi = find_dihedral_presentation(*out.group);
  if (phi) {
    std::vector<Elem> back(static_cast<std::size_t>(k));
    for (Elem x = 0; x < k; ++x) back[(*phi)[x]] = x;
    for (auto& c : out.coset_of) c = back[c];
    std::vector<Elem> reps(static_cast<std::size_t>(k));
    for (Elem x = 0; x < k; ++x) reps[x] = out.representative[(*phi)[x]];
    out.representative = std::move(reps);
    out.group = dihedral(k / 2);
  }
  return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const auto& members = h.elements();
  const int k = h.order();
  std::vector<Elem> index(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) index[members[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels;
  for (int x = 0; x < k; ++x) {
    labels.push_back(g.label(members[x]));
    for (int y = 0; y < k; ++y) {
      const Elem z = index[g.mul(members[x], members[y])];
      if (z < 0) throw InvalidArgument("subset is not closed under multiplication");
      table[static_cast<std::size_t>(x) * k + y] = z;
    }
  }
  return {std::make_shared<const FiniteGroup>(FiniteGroup::trusted(std::move(table), std::move(labels))),
          members};
}

}  // namespace skewmaps
