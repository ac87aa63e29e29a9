#include "skewmaps/skew.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "skewmaps/error.hpp"

namespace skewmaps {

std::optional<SkewMorphism> check_skew(const FiniteGroup& g, const Perm& psi) {
  const int n = g.order();
  if (psi.size() != n) throw InvalidArgument("permutation size does not match group order");
  if (psi(kIdentity) != kIdentity) return std::nullopt;
  const int r = static_cast<int>(psi.order());
  // powers[k][h] = psi^k(h) for k in 0..r-1
  std::vector<std::vector<Elem>> powers(static_cast<std::size_t>(r));
  powers[0].resize(static_cast<std::size_t>(n));
  std::iota(powers[0].begin(), powers[0].end(), 0);
  for (int k = 1; k < r; ++k) {
    powers[k].resize(static_cast<std::size_t>(n));
    for (Elem h = 0; h < n; ++h) powers[k][h] = psi(powers[k - 1][h]);
  }
  SkewMorphism out{psi, r, std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<Elem> target(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) {
    const Elem inv = g.inv(psi(x));
    for (Elem h = 0; h < n; ++h) target[h] = g.mul(inv, psi(g.mul(x, h)));
    int found = 0;
    for (int k = 1; k <= r; ++k) {
      if (std::equal(target.begin(), target.end(), powers[k % r].begin())) {
        if (found != 0)
          throw std::logic_error("two power values modulo the order of psi");
        found = k;
      }
    }
    if (found == 0) return std::nullopt;
    out.pi[x] = found;
  }
  return out;
}

Subgroup kernel(const FiniteGroup& g, const SkewMorphism& s) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x)
    if (s.pi[x] == 1) members.push_back(x);
  Subgroup k(std::move(members));
  if (!is_subgroup(g, k.elements())) throw std::logic_error("power-function kernel is not closed");
  return k;
}

bool power_sum_check(const FiniteGroup& g, const SkewMorphism& s, Elem x, Elem y) {
  long long sum = 0;
  Elem z = y;
  for (int i = 0; i < s.pi[x]; ++i) {
    sum += s.pi[z];
    z = s.psi(z);
  }
  return (sum - s.pi[g.mul(x, y)]) % s.order == 0;
}

std::vector<Elem> orbit_of(const SkewMorphism& s, Elem x) {
  std::vector<Elem> out{x};
  for (Elem y = s.psi(x); y != x; y = s.psi(y)) out.push_back(y);
  return out;
}

bool is_group_automorphism(const FiniteGroup& g, const Perm& p) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (p(g.mul(x, y)) != g.mul(p(x), p(y))) return false;
  return true;
}

namespace {

// Depth-first search for skew-morphisms of a fixed order r whose power
// function has a fixed kernel K.
//
// pi is constant on right cosets of K and takes distinct values on distinct
// cosets, so it is tracked per coset together with a mask of values still
// possible. psi restricted to K is an injective homomorphism.
//
// Every element g with known psi(g) and pi(g) forces, for each h whose
// psi-chain is known for pi(g) steps, psi(gh) = psi(g) psi^pi(g)(h) and
// pi(gh) = sum_{i < pi(g)} pi(psi^i(h)) mod r. A known psi(gh) pins
// psi^pi(g)(h), which can close a gap in a partial chain; when pi(g) is still
// open it filters the mask instead. Cycles must have length dividing r.
class KernelSearch {
 public:
  KernelSearch(const FiniteGroup& g, int r, const Subgroup& k, std::vector<Elem> order)
      : g_(g), n_(g.order()), r_(r), branch_order_(std::move(order)) {
    psi_.assign(static_cast<std::size_t>(n_), -1);
    pinv_.assign(static_cast<std::size_t>(n_), -1);
    in_kernel_.assign(static_cast<std::size_t>(n_), 0);
    for (Elem x : k.elements()) in_kernel_[x] = 1;
    const auto part = cosets(g, k, CosetSide::right);
    coset_of_ = part.block_of;
    const int cosets = static_cast<int>(part.blocks.size());
    cpi_.assign(static_cast<std::size_t>(cosets), 0);
    mask_.assign(static_cast<std::size_t>(cosets), 0);
    for (int v = 2; v <= r_; ++v) full_ |= Mask{1} << v;
    for (int c = 1; c < cosets; ++c) mask_[c] = full_;
    mask_[0] = Mask{1} << 1;
    cpi_[0] = 1;
    feasible_ = cosets - 1 <= r_ - 1;
    elem_order_.resize(static_cast<std::size_t>(n_));
    for (Elem x = 0; x < n_; ++x) elem_order_[x] = g.element_order(x);
  }

  void run(std::vector<SkewMorphism>& out, SkewSearchStats& stats) {
    if (!feasible_) return;
    if (!assign_psi(kIdentity, kIdentity)) return;
    if (!propagate()) return;
    dfs(out, stats);
  }

 private:
  using Mask = std::uint64_t;

  struct Walk {
    bool complete;
    Elem at;    // result when complete, otherwise the element with unknown image
    int steps;  // steps taken before getting stuck
  };

  enum class Kind { psi, cpi, mask };
  struct Entry {
    Kind kind;
    int index;
    Mask old;
  };

  int pi(Elem x) const { return cpi_[coset_of_[x]]; }

  void dfs(std::vector<SkewMorphism>& out, SkewSearchStats& stats) {
    ++stats.nodes;
    const Elem var = choose();
    if (var < 0) {
      ++stats.leaves;
      emit(out);
      return;
    }
    const std::size_t mark = trail_.size();
    for (Elem v = 1; v < n_; ++v) {
      if (pinv_[v] >= 0) continue;
      if (in_kernel_[var] && elem_order_[v] != elem_order_[var]) continue;
      if (assign_psi(var, v) && propagate()) dfs(out, stats);
      undo(mark);
    }
  }

  Elem choose() const {
    for (Elem x : branch_order_) {
      // Follow the orbit from x so that chains close early.
      Elem y = x;
      for (int guard = 0; guard < n_; ++guard) {
        if (psi_[y] < 0) return y;
        y = psi_[y];
        if (y == x) break;
      }
    }
    return -1;
  }

  void emit(std::vector<SkewMorphism>& out) const {
    Perm p(psi_);
    if (p.order() != r_) return;
    auto s = check_skew(g_, p);
    if (!s) return;
    for (Elem x = 0; x < n_; ++x)
      if ((s->pi[x] == 1) != (in_kernel_[x] != 0)) return;
    out.push_back(std::move(*s));
  }

  bool assign_psi(Elem u, Elem v) {
    if (psi_[u] >= 0) return psi_[u] == v;
    if (pinv_[v] >= 0) return false;
    if ((u == kIdentity) != (v == kIdentity)) return false;
    if (in_kernel_[u] && elem_order_[u] != elem_order_[v]) return false;
    psi_[u] = v;
    pinv_[v] = u;
    trail_.push_back({Kind::psi, u, 0});
    changed_ = true;
    int count = 1;
    Elem x = v;
    while (true) {
      if (x == u) return r_ % count == 0;
      ++count;
      if (psi_[x] < 0) break;
      x = psi_[x];
    }
    for (Elem y = u; pinv_[y] >= 0; y = pinv_[y]) ++count;
    return count <= r_;
  }

  bool restrict_mask(int c, Mask allowed) {
    const Mask m = mask_[c] & allowed;
    if (m == mask_[c]) return true;
    if (m == 0) return false;
    trail_.push_back({Kind::mask, c, mask_[c]});
    mask_[c] = m;
    changed_ = true;
    if (cpi_[c] == 0 && (m & (m - 1)) == 0) return assign_coset(c, std::countr_zero(m));
    return true;
  }

  bool assign_coset(int c, int value) {
    if (cpi_[c] != 0) return cpi_[c] == value;
    if (value < 1 || value > r_ || !(mask_[c] >> value & 1)) return false;
    cpi_[c] = value;
    trail_.push_back({Kind::cpi, c, 0});
    changed_ = true;
    if (mask_[c] != (Mask{1} << value) && !restrict_mask(c, Mask{1} << value)) return false;
    const Mask without = ~(Mask{1} << value);
    for (int d = 0; d < static_cast<int>(cpi_.size()); ++d) {
      if (d == c) continue;
      if (cpi_[d] == value) return false;
      if (cpi_[d] == 0 && !restrict_mask(d, without)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Entry e = trail_.back();
      trail_.pop_back();
      switch (e.kind) {
        case Kind::psi:
          pinv_[psi_[e.index]] = -1;
          psi_[e.index] = -1;
          break;
        case Kind::cpi:
          cpi_[e.index] = 0;
          break;
        case Kind::mask:
          mask_[e.index] = e.old;
          break;
      }
    }
  }

  // psi^k(h) for 0 <= k < r along known images.
  Walk walk(Elem h, int k) const {
    Elem x = h;
    for (int i = 0; i < k; ++i) {
      if (psi_[x] < 0) return {false, x, i};
      x = psi_[x];
      if (x == h) {
        const int len = i + 1;
        for (int rest = (k - len) % len; rest > 0; --rest) x = psi_[x];
        return {true, x, k};
      }
    }
    return {true, x, k};
  }

  // sum_{i < k} pi(psi^i(h)) for 1 <= k <= r, or -1 when unknown.
  long long pi_sum(Elem h, int k) const {
    long long sum = 0;
    Elem x = h;
    for (int i = 0; i < k; ++i) {
      if (pi(x) == 0) return -1;
      sum += pi(x);
      if (psi_[x] < 0) return i + 1 == k ? sum : -1;
      x = psi_[x];
      if (x == h) {
        const int len = i + 1;
        sum *= k / len;
        Elem y = h;
        for (int rest = k % len; rest > 0; --rest) {
          sum += pi(y);
          y = psi_[y];
        }
        return sum;
      }
    }
    return sum;
  }

  // Values k in 1..r still compatible with psi^k(h) = target.
  Mask compatible_powers(Elem h, Elem target) const {
    int pos = -1;  // position of target on the known chain from h
    Elem x = h;
    for (int i = 0; i < r_; ++i) {
      if (x == target) pos = i;
      if (psi_[x] < 0) {
        // psi^k(h) is open for k > i.
        Mask m = full_ | Mask{1} << 1;
        m &= ~((Mask{2} << i) - 1);
        m &= ~Mask{1};
        if (pos > 0) m |= Mask{1} << pos;
        return m;
      }
      x = psi_[x];
      if (x == h) {
        if (pos < 0) return 0;
        const int len = i + 1;
        Mask m = 0;
        for (int k = 1; k <= r_; ++k)
          if (k % len == pos) m |= Mask{1} << k;
        return m;
      }
    }
    return 0;
  }

  // psi(x)^-1 lies on the orbit of x^-1, so inverses of orbits are orbits.
  // Checks that the known chain through x^-1 does not contradict this.
  bool inverse_orbit_ok(Elem x) const {
    const Elem target = g_.inv(psi_[x]);
    const Elem start = g_.inv(x);
    Elem y = start;
    for (int i = 0; i < r_; ++i) {
      if (y == target) return true;
      if (psi_[y] < 0) break;
      y = psi_[y];
      if (y == start) return false;
    }
    // The backward chain from target must not close without meeting start.
    y = target;
    for (int i = 0; i < r_; ++i) {
      if (y == start) return true;
      if (pinv_[y] < 0) return true;
      y = pinv_[y];
      if (y == target) return false;
    }
    return true;
  }

  // Enforces psi^k(h) = v when the chain from h is incomplete.
  bool pin_power(Elem h, int k, Elem v) {
    const Walk fw = walk(h, k);
    if (fw.complete) return fw.at == v;
    const Elem w = fw.at;
    const int rem = k - fw.steps;
    if (w == v) return true;
    Elem y = v;
    int back = 0;
    while (back < rem && pinv_[y] >= 0) {
      y = pinv_[y];
      ++back;
      if (y == v) return false;  // v lies on a closed cycle that misses w
    }
    if (back == rem) return y == w;
    if (rem - back == 1) return assign_psi(w, y);
    return true;
  }

  bool propagate() {
    do {
      changed_ = false;
      for (Elem x = 0; x < n_; ++x) {
        if (psi_[x] < 0) continue;
        if (!inverse_orbit_ok(x)) return false;
        const Elem px = psi_[x];
        const Elem px_inv = g_.inv(px);
        const int c = coset_of_[x];
        const int kfull = cpi_[c];
        // h -> psi(x)^-1 psi(xh) is a power of psi, so it commutes with psi.
        for (Elem h = 1; h < n_; ++h) {
          const Elem ph = psi_[h];
          const Elem pxh = psi_[g_.mul(x, h)];
          if (ph < 0 || pxh < 0) continue;
          const Elem u = g_.mul(px_inv, pxh);
          const Elem y = g_.mul(x, ph);
          if (psi_[y] >= 0) {
            if (!assign_psi(u, g_.mul(px_inv, psi_[y]))) return false;
          } else if (psi_[u] >= 0) {
            if (!assign_psi(y, g_.mul(px, psi_[u]))) return false;
          }
        }
        if (kfull == 0) {
          Mask allowed = full_;
          for (Elem h = 0; h < n_ && allowed != 0; ++h) {
            const Elem xh = g_.mul(x, h);
            if (psi_[xh] < 0) continue;
            allowed &= compatible_powers(h, g_.mul(px_inv, psi_[xh]));
          }
          if (!restrict_mask(c, allowed)) return false;
          if (cpi_[c] == 0) continue;
        }
        const int kk = cpi_[c];
        const int k = kk % r_;
        for (Elem h = 0; h < n_; ++h) {
          const Elem xh = g_.mul(x, h);
          const Walk fw = walk(h, k);
          if (fw.complete) {
            if (!assign_psi(xh, g_.mul(px, fw.at))) return false;
          } else if (psi_[xh] >= 0) {
            if (!pin_power(h, k, g_.mul(px_inv, psi_[xh]))) return false;
          }
          const long long sum = pi_sum(h, kk);
          if (sum >= 0) {
            const int value = static_cast<int>((sum - 1) % r_) + 1;
            if (!assign_coset(coset_of_[xh], value)) return false;
          }
        }
      }
    } while (changed_);
    return true;
  }

  const FiniteGroup& g_;
  int n_;
  int r_;
  std::vector<Elem> branch_order_;
  std::vector<Elem> psi_, pinv_;
  std::vector<char> in_kernel_;
  std::vector<int> coset_of_;
  std::vector<int> cpi_;
  std::vector<Mask> mask_;
  Mask full_ = 0;
  std::vector<int> elem_order_;
  std::vector<Entry> trail_;
  bool feasible_ = true;
  bool changed_ = false;
};

// Generators of k first (largest orders first), then generators of g, then
// everything else.
std::vector<Elem> branch_order(const FiniteGroup& g, const Subgroup& k) {
  std::vector<Elem> order;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  auto by_order = [&](std::vector<Elem> pool) {
    std::stable_sort(pool.begin(), pool.end(), [&](Elem a, Elem b) {
      return g.element_order(a) > g.element_order(b);
    });
    return pool;
  };
  auto add_generators = [&](const std::vector<Elem>& pool) {
    std::vector<Elem> gens;
    Subgroup span = subgroup_generated(g, gens);
    for (Elem x : by_order(pool)) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      span = subgroup_generated(g, gens);
    }
    for (Elem x : gens)
      if (!used[x]) {
        used[x] = 1;
        order.push_back(x);
      }
  };
  add_generators(k.elements());
  std::vector<Elem> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  if (g.is_dihedral()) {
    for (Elem x : {g.delem(1, 0), g.delem(0, 1)})
      if (!used[x]) {
        used[x] = 1;
        order.push_back(x);
      }
  } else {
    add_generators(all);
  }
  for (Elem x : all)
    if (!used[x]) order.push_back(x);
  return order;
}

SkewMorphism conjugate_skew(const SkewMorphism& s, const Perm& alpha) {
  // alpha psi alpha^-1 with power function pi o alpha^-1
  const Perm psi = alpha * s.psi * alpha.inverse();
  std::vector<int> pi(s.pi.size());
  for (std::size_t x = 0; x < pi.size(); ++x) pi[alpha(static_cast<Elem>(x))] = s.pi[x];
  return {psi, s.order, std::move(pi)};
}

}  // namespace

std::vector<SkewMorphism> enumerate_skew_morphisms(const FiniteGroup& g,
                                                   const SkewSearchOptions& options,
                                                   SkewSearchStats* stats) {
  if (g.order() > options.bound)
    throw CapacityError("skew-morphism enumeration", g.order(), options.bound);
  std::vector<SkewMorphism> out;
  SkewSearchStats total;
  if (g.order() == 1) {
    out.push_back({Perm::identity(1), 1, {1}});
    if (stats) *stats = total;
    return out;
  }
  // Conjugating by an automorphism maps skew-morphisms with kernel K to those
  // with kernel alpha(K), so one kernel per automorphism class is searched.
  const auto autos = automorphisms(g, std::max(options.bound, kDefaultGroupBound));
  const auto subgroups = all_subgroups(g, std::max(options.bound, kDefaultGroupBound));
  std::vector<Subgroup> reps;
  {
    std::set<Subgroup> seen;
    for (const auto& k : subgroups) {
      if (seen.count(k)) continue;
      reps.push_back(k);
      for (const auto& a : autos) {
        std::vector<Elem> img;
        for (Elem x : k.elements()) img.push_back(a(x));
        std::sort(img.begin(), img.end());
        seen.insert(Subgroup(std::move(img)));
      }
    }
  }
  struct Task {
    std::size_t kernel;
    int r;
  };
  std::vector<Task> tasks;
  // Orders of skew-morphisms are below |G|.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int r = 1; r < g.order(); ++r)
      if (g.order() / reps[i].order() <= r) tasks.push_back({i, r});

  std::vector<std::vector<SkewMorphism>> found(tasks.size());
  std::vector<SkewSearchStats> task_stats(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& k = reps[tasks[t].kernel];
      KernelSearch(g, tasks[t].r, k, branch_order(g, k)).run(found[t], task_stats[t]);
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::set<std::vector<Elem>> seen;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    total.nodes += task_stats[t].nodes;
    total.leaves += task_stats[t].leaves;
    for (const auto& s : found[t]) {
      for (const auto& a : autos) {
        auto c = conjugate_skew(s, a);
        if (seen.insert({c.psi.images().begin(), c.psi.images().end()}).second) out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SkewMorphism& a, const SkewMorphism& b) { return a.psi < b.psi; });
  if (stats) *stats = total;
  return out;
}

std::vector<SkewMorphism> enumerate_skew_morphisms_naive(const FiniteGroup& g, int bound) {
  if (g.order() > bound) throw CapacityError("naive skew-morphism enumeration", g.order(), bound);
  std::vector<Elem> images(static_cast<std::size_t>(g.order()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<SkewMorphism> out;
  do {
    if (auto s = check_skew(g, Perm(images))) out.push_back(std::move(*s));
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return out;
}

}  // namespace skewmaps
