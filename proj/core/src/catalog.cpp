#include "skewmaps/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "skewmaps/graph.hpp"

namespace skewmaps {

namespace {

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string witness_text(const CayleyMap& m, const std::vector<Elem>& phi, const FiniteGroup& target) {
  const FiniteGroup& g = m.group();
  if (!g.is_dihedral()) return "";
  return "a->" + target.label(phi[g.delem(1, 0)]) + " b->" + target.label(phi[g.delem(0, 1)]);
}

std::vector<Elem> map1_rotation(const FiniteGroup& g) {
  std::vector<Elem> rot;
  for (int i = 0; i < g.dihedral_n(); ++i) rot.push_back(g.delem(i, i % 2 == 0 ? 1 : 0));
  return rot;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::thm_main_1a: return "thm_main_1a";
    case Family::thm_main_1b: return "thm_main_1b";
    case Family::thm_main_2: return "thm_main_2";
    case Family::thm_main_3: return "thm_main_3";
    case Family::map1: return "map1";
    case Family::map2: return "map2";
    case Family::cfree: return "cfree";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::thm_main_1a, Family::thm_main_1b, Family::thm_main_2, Family::thm_main_3,
                   Family::map1, Family::map2, Family::cfree})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string to_string(const FamilyId& f) {
  return family_name(f.family) + "(" + std::to_string(f.n) + ")";
}

Perm map1_psi(const FiniteGroup& dn) {
  const int n = dn.dihedral_n();
  std::vector<Elem> img(static_cast<std::size_t>(dn.order()));
  for (int j = 0; j < n; ++j) {
    img[dn.delem(j, 0)] = j % 2 == 0 ? dn.delem(-j, 0) : dn.delem(j + 1, 1);
    img[dn.delem(j, 1)] = j % 2 == 0 ? dn.delem(j + 1, 0) : dn.delem(-j, 1);
  }
  return Perm(std::move(img));
}

Perm map2_psi(const FiniteGroup& dn) {
  const int n = dn.dihedral_n();
  const int m = n / 2;
  std::vector<Elem> img(static_cast<std::size_t>(dn.order()));
  for (int j = 0; j < n; ++j) {
    if (j % 2 == 0) {
      img[dn.delem(j, 0)] = dn.delem(j / 2 * m - j, 0);
      img[dn.delem(j, 1)] = dn.delem(j + 1 + j / 2 * m, 0);
    } else {
      img[dn.delem(j, 0)] = dn.delem(j + 1 + (j + 1) / 2 * m, 1);
      img[dn.delem(j, 1)] = dn.delem((j + 1) / 2 * m - j, 1);
    }
  }
  return Perm(std::move(img));
}

CayleyMap build_family(const FamilyId& f) {
  const int n = f.n;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(family_name(f.family) + " needs " + what + ", got n=" + std::to_string(n));
  };
  switch (f.family) {
    case Family::thm_main_1a:
    case Family::thm_main_1b: {
      need(n == 2, "n = 2");
      const auto g = dihedral(2);
      const Elem a = g->delem(1, 0), b = g->delem(0, 1), ab = g->delem(1, 1);
      if (f.family == Family::thm_main_1a) return CayleyMap(g, {a, b});
      return CayleyMap(g, {a, b, ab});
    }
    case Family::thm_main_2: {
      need(n == 4, "n = 4");
      const auto g = dihedral(4);
      return CayleyMap(g, {g->delem(1, 0), g->delem(0, 1), g->delem(-1, 0)});
    }
    case Family::thm_main_3: {
      need(n == 6, "n = 6");
      const auto g = dihedral(6);
      return CayleyMap(g, {g->delem(1, 0), g->delem(-1, 0), g->delem(1, 1), g->delem(-1, 1)});
    }
    case Family::map1:
    case Family::cfree: {
      if (f.family == Family::map1)
        need(n >= 6 && n % 2 == 0, "even n >= 6");
      else
        need(n >= 6 && n % 4 == 2, "n = 2m with m odd >= 3");
      const auto g = dihedral(n);
      return CayleyMap(g, map1_rotation(*g));
    }
    case Family::map2: {
      need(n >= 8 && n % 8 == 0, "8 | n");
      const auto g = dihedral(n);
      const Perm psi = map2_psi(*g);
      std::vector<Elem> rot{g->delem(0, 1)};
      for (Elem x = psi(rot.front()); x != rot.front(); x = psi(x)) rot.push_back(x);
      return CayleyMap(g, std::move(rot));
    }
  }
  throw InvalidArgument("unknown family");
}

std::vector<FamilyId> families_on(int n) {
  std::vector<FamilyId> out;
  if (n == 2) out = {{Family::thm_main_1a, 2}, {Family::thm_main_1b, 2}};
  if (n == 4) out.push_back({Family::thm_main_2, 4});
  if (n == 6) out.push_back({Family::thm_main_3, 6});
  if (n >= 6 && n % 2 == 0) out.push_back({Family::map1, n});
  if (n >= 8 && n % 8 == 0) out.push_back({Family::map2, n});
  if (n >= 6 && n % 4 == 2) out.push_back({Family::cfree, n});
  return out;
}

std::vector<FamilyId> kernel4_families(int n) {
  std::vector<FamilyId> out;
  for (const auto& f : families_on(n))
    if (f.family != Family::cfree) out.push_back(f);
  return out;
}

int ClassificationResult::reflection_classes() const {
  int count = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].mirror < 0 || classes[i].mirror >= static_cast<int>(i)) ++count;
  return count;
}

ClassificationResult classify(int n, const ClassifyOptions& options) {
  if (n < 2) throw InvalidArgument("classification needs n >= 2");
  if (n > options.bound) throw CapacityError("classification", n, options.bound);
  const auto start = std::chrono::steady_clock::now();
  const auto g = dihedral(n);
  ClassificationResult res;
  res.n = n;
  const auto skews = enumerate_skew_morphisms(*g, {std::max(kDefaultSkewBound, 2 * n), options.jobs});
  res.stats.skew_morphisms = skews.size();

  std::set<std::vector<Elem>> seen;
  std::vector<CayleyMap> cands;
  for (const auto& s : skews) {
    for (auto& cyc : s.psi.cycles()) {
      if (std::find(cyc.begin(), cyc.end(), kIdentity) != cyc.end()) continue;
      auto sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      bool closed = true;
      for (Elem x : cyc) closed = closed && std::binary_search(sorted.begin(), sorted.end(), g->inv(x));
      if (!closed || subgroup_generated(*g, sorted).order() != g->order()) continue;
      auto rot = normalized_rotation(cyc);
      if (seen.insert(rot).second) cands.emplace_back(g, std::move(rot));
    }
  }
  res.stats.candidates = cands.size();

  const bool want_skew = options.keep_candidates || options.oracle == RegularityOracle::skew;
  const bool want_dart = options.keep_candidates || options.oracle == RegularityOracle::dart;
  std::vector<char> by_skew(cands.size(), 0), by_dart(cands.size(), 0);
  parallel_for(cands.size(), options.jobs, [&](std::size_t i) {
    if (want_skew) by_skew[i] = construct_skew(cands[i]).has_value();
    if (want_dart) by_dart[i] = is_regular(cands[i]);
  });
  if (options.keep_candidates)
    for (std::size_t i = 0; i < cands.size(); ++i)
      res.candidates.push_back({cands[i], by_skew[i] != 0, by_dart[i] != 0});

  const auto autos = automorphisms(*g);
  std::set<std::vector<Elem>> keys;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const bool regular = options.oracle == RegularityOracle::skew ? by_skew[i] : by_dart[i];
    if (!regular) continue;
    ++res.stats.regular;
    keys.insert(canonical_key(cands[i], autos));
  }
  std::vector<std::vector<Elem>> ordered(keys.begin(), keys.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<std::optional<MapClass>> slots(ordered.size());
  const auto families = families_on(n);
  parallel_for(ordered.size(), options.jobs, [&](std::size_t i) {
    CayleyMap rep(g, ordered[i]);
    MapAnalysis a = analyze(rep);
    if (!a.regular) throw std::logic_error("class representative is not regular");
    if (options.kernel && a.kernel.order() != *options.kernel) return;
    MapClass c{rep, std::move(a), ordered[i], std::nullopt, {}, -1};
    for (const auto& f : families) {
      if (auto phi = equivalent(rep, build_family(f))) {
        c.family = f;
        c.witness = std::move(*phi);
        break;
      }
    }
    slots[i] = std::move(c);
  });
  for (auto& s : slots)
    if (s) res.classes.push_back(std::move(*s));
  std::map<std::vector<Elem>, int> index;
  for (std::size_t i = 0; i < res.classes.size(); ++i) index[res.classes[i].key] = static_cast<int>(i);
  for (auto& c : res.classes) {
    const auto it = index.find(canonical_key(mirror(c.representative), autos));
    if (it != index.end()) c.mirror = it->second;
  }
  res.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

bool VerificationReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

VerificationReport verify_theorem_main(int max_n, int jobs) {
  VerificationReport rep{"classes with |kernel| = 4", {}};
  std::vector<std::string> counts;
  bool all = true;
  for (int n = 2; n <= max_n; ++n) {
    ClassifyOptions opt;
    opt.kernel = 4;
    opt.jobs = jobs;
    opt.bound = std::max(max_n, kDefaultClassifyBound);
    const auto res = classify(n, opt);
    const auto expected = kernel4_families(n);
    std::vector<int> used(expected.size(), 0);
    bool pass = res.classes.size() == expected.size();
    std::vector<std::string> parts;
    for (const auto& c : res.classes) {
      int hits = 0;
      std::string matched = "unmatched " + describe(c.representative);
      for (std::size_t f = 0; f < expected.size(); ++f) {
        const auto fam = build_family(expected[f]);
        if (auto phi = equivalent(c.representative, fam)) {
          ++hits;
          ++used[f];
          matched = to_string(expected[f]) + " [" + witness_text(c.representative, *phi, fam.group()) + "]";
        }
      }
      if (hits == 0 && n % 2 == 0 && n >= 4 && n < 6) {
        const auto g = dihedral(n);
        if (auto phi = equivalent(c.representative, CayleyMap(g, map1_rotation(*g))))
          matched += " (the map1 rotation pattern at n=" + std::to_string(n) + ", outside its n >= 6 range)";
      }
      pass = pass && hits == 1;
      parts.push_back(matched);
    }
    for (int u : used) pass = pass && u == 1;
    counts.push_back(std::to_string(res.classes.size()));
    all = all && pass;
    std::string detail = std::to_string(res.classes.size()) + " class(es)";
    if (!parts.empty()) detail += ": " + join(parts);
    rep.lines.push_back({"n=" + std::to_string(n), pass, detail});
  }
  rep.lines.push_back({"counts n=2.." + std::to_string(max_n), all, join(counts, ",")});
  return rep;
}

VerificationReport verify_theorem_min(int max_n, int jobs) {
  VerificationReport rep{"kernels of all regular Cayley maps", {}};
  for (int n = 2; n <= max_n; ++n) {
    ClassifyOptions opt;
    opt.jobs = jobs;
    opt.bound = std::max(max_n, kDefaultClassifyBound);
    const auto res = classify(n, opt);
    const auto& g = res.classes.empty() ? *dihedral(n) : res.classes.front().representative.group();
    std::map<int, int> sizes;
    bool pass = true;
    int exceptional = 0;
    for (const auto& c : res.classes) {
      const auto& k = c.analysis.kernel;
      ++sizes[k.order()];
      const bool reflection = std::any_of(k.elements().begin(), k.elements().end(),
                                          [&](Elem x) { return g.refl(x) == 1; });
      bool size_ok = k.order() >= 4;
      if (!size_ok && n == 3 && k.order() == 2 &&
          graph_isomorphism(cayley_graph(c.representative), complete_multipartite(3, 2))) {
        size_ok = true;
        ++exceptional;
      }
      pass = pass && reflection && size_ok;
    }
    if (n == 3) pass = pass && exceptional > 0;
    std::vector<std::string> parts;
    for (auto [s, c] : sizes) parts.push_back(std::to_string(s) + ":" + std::to_string(c));
    std::string detail = std::to_string(res.classes.size()) + " classes, kernel sizes {" + join(parts) + "}";
    if (n == 3) detail += ", octahedral exceptions " + std::to_string(exceptional);
    rep.lines.push_back({"n=" + std::to_string(n), pass, detail});
  }
  return rep;
}

namespace {

CheckLine check_family(const FamilyId& id, const Perm& closed) {
  CheckLine line{to_string(id), true, ""};
  std::vector<std::string> notes;
  auto note = [&](bool ok, const std::string& what) {
    notes.push_back(what + (ok ? " ok" : " FAIL"));
    line.pass = line.pass && ok;
  };
  const auto m = build_family(id);
  const FiniteGroup& g = m.group();
  const int n = id.n, half = n / 2;
  const auto by_dart = associated_skew(m);
  const auto by_skew = construct_skew(m);
  note(by_dart.has_value() && is_regular(m), "regular(dart)");
  note(by_skew.has_value(), "regular(skew)");
  if (!by_dart || !by_skew) {
    line.detail = join(notes, "; ");
    return line;
  }
  int equal = 0;
  for (Elem x = 0; x < g.order(); ++x)
    equal += by_dart->psi(x) == closed(x) && by_skew->psi(x) == closed(x);
  note(equal == g.order(), "psi " + std::to_string(equal) + "/" + std::to_string(g.order()));
  const auto& s = *by_dart;
  const Elem a = g.delem(1, 0), b = g.delem(0, 1);
  std::vector<Elem> expect{kIdentity, g.delem(half, 0), g.mul(b, a), g.mul(b, g.power(a, half + 1))};
  std::sort(expect.begin(), expect.end());
  note(kernel(g, s).elements() == expect, "kernel {1, a^m, ba, ba^(m+1)}");
  std::set<int> values(s.pi.begin(), s.pi.end()), odd;
  for (int i = 1; i < n; i += 2) odd.insert(i);
  note(values == odd, "Pi = odd residues");
  if (n % 4 == 0) {
    bool eq = true;
    for (Elem x = 0; x < g.order(); ++x) eq = eq && ((s.pi[x] % 4 == 3) == m.contains(x));
    note(eq, "pi = -1 mod 4 exactly on X");
  }
  if (id.family == Family::map1) {
    const auto px = power_on_X(m);
    bool ok = true;
    for (int i = 0; i < half; ++i) {
      ok = ok && mod(px[m.position(g.delem(2 * i + 1, 0))] - (4 * i + 3), n) == 0;
      ok = ok && mod(px[m.position(g.delem(2 * i, 1))] - (n - 4 * i - 1), n) == 0;
    }
    note(ok, "pi on X from chi");
  }
  const auto aut = map_automorphism_group(m);
  const int core = rotation_core(m, aut).order();
  const int want = id.family == Family::map2 ? 2 : (half % 2 == 1 ? 1 : 2);
  note(core == want, "core |N|=" + std::to_string(core));
  line.detail = join(notes, "; ");
  return line;
}

}  // namespace

VerificationReport verify_family_lemmas(const std::vector<int>& n_list) {
  VerificationReport rep{"family lemmas", {}};
  for (int n : n_list) {
    bool any = false;
    if (n >= 6 && n % 2 == 0) {
      const auto g = dihedral(n);
      rep.lines.push_back(check_family({Family::map1, n}, map1_psi(*g)));
      any = true;
    }
    if (n >= 8 && n % 8 == 0) {
      const auto g = dihedral(n);
      rep.lines.push_back(check_family({Family::map2, n}, map2_psi(*g)));
      any = true;
    }
    if (!any) rep.lines.push_back({"n=" + std::to_string(n), false, "no family member is defined for this n"});
  }
  return rep;
}

VerificationReport verify_cfree(int n, int jobs) {
  if (n < 5) throw InvalidArgument("core-free verification needs n >= 5");
  VerificationReport rep{"core-free rotation subgroup", {}};
  ClassifyOptions opt;
  opt.jobs = jobs;
  opt.bound = std::max(n, kDefaultClassifyBound);
  const auto res = classify(n, opt);
  const bool expect_one = n % 4 == 2;
  int found = 0;
  for (const auto& c : res.classes) {
    const auto aut = map_automorphism_group(c.representative, 4 * n * n);
    if (rotation_core(c.representative, aut).order() != 1) continue;
    ++found;
    CheckLine line{describe(c.representative), true, ""};
    std::vector<std::string> notes;
    const long long order = aut.group->order();
    notes.push_back("|Aut|=" + std::to_string(order));
    line.pass = order == 2LL * n * n;
    if (expect_one) {
      const auto fam = build_family({Family::cfree, n});
      const auto phi = equivalent(c.representative, fam);
      line.pass = line.pass && phi.has_value();
      notes.push_back(phi ? "equivalent to cfree [" + witness_text(c.representative, *phi, fam.group()) + "]"
                          : "not equivalent to cfree");
    }
    if (n == 6) {
      const auto target = swap_extension(3);
      const auto iso = isomorphism(*aut.group, *target, aut.group->order());
      line.pass = line.pass && iso.has_value();
      if (iso) {
        std::vector<std::string> images;
        for (Elem s : generating_set(*aut.group))
          images.push_back(aut.group->label(s) + "->" + target->label((*iso)[s]));
        notes.push_back("Aut isomorphic to swap_extension(3) via " + join(images));
      } else {
        notes.push_back("Aut not isomorphic to swap_extension(3)");
      }
    }
    line.detail = join(notes, "; ");
    rep.lines.push_back(std::move(line));
  }
  rep.lines.push_back({"n=" + std::to_string(n), found == (expect_one ? 1 : 0),
                       std::to_string(found) + " core-free class(es) among " +
                           std::to_string(res.classes.size()) + ", expected " + (expect_one ? "1" : "0")});
  return rep;
}

VerificationReport verify_rotation_normality(int max_n, int jobs) {
  VerificationReport rep{"rotation part of the kernel is normal", {}};
  for (int n = 2; n <= max_n; ++n) {
    ClassifyOptions opt;
    opt.jobs = jobs;
    opt.bound = std::max(max_n, kDefaultClassifyBound);
    const auto res = classify(n, opt);
    int tested = 0;
    bool pass = true;
    for (const auto& c : res.classes) {
      const auto& g = c.representative.group();
      std::vector<Elem> rot;
      for (Elem x : c.analysis.kernel.elements())
        if (g.refl(x) == 0) rot.push_back(x);
      if (rot.size() <= 2) continue;
      ++tested;
      const auto aut = map_automorphism_group(c.representative);
      const Subgroup lm = aut.left_of(rot);
      pass = pass && conjugate(*aut.group, lm, aut.psi) == lm && is_normal(*aut.group, lm);
    }
    rep.lines.push_back({"n=" + std::to_string(n), pass,
                         std::to_string(tested) + " of " + std::to_string(res.classes.size()) +
                             " classes have |C_n and kernel| > 2"});
  }
  return rep;
}

VerificationReport verify_oracles(int max_n, int jobs) {
  VerificationReport rep{"regularity oracles and kernel conjugation", {}};
  for (int n = 2; n <= max_n; ++n) {
    ClassifyOptions opt;
    opt.jobs = jobs;
    opt.keep_candidates = true;
    opt.bound = std::max(max_n, kDefaultClassifyBound);
    const auto res = classify(n, opt);
    int disagree = 0, regular = 0, conj_fail = 0;
    for (const auto& c : res.candidates) {
      if (c.regular_skew != c.regular_dart) ++disagree;
      if (c.regular_dart) {
        ++regular;
        if (!kernel_conjugation_check(c.map)) ++conj_fail;
      }
    }
    // Other cyclic orders of the same generating sets, mostly non-regular.
    std::set<std::vector<Elem>> sets;
    for (const auto& c : res.candidates) sets.insert(c.map.generators());
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n));
    int perturbed = 0, perturbed_regular = 0;
    for (const auto& xs : sets) {
      std::vector<Elem> rest(xs.begin() + 1, xs.end());
      auto test = [&](const std::vector<Elem>& tail) {
        std::vector<Elem> rot{xs.front()};
        rot.insert(rot.end(), tail.begin(), tail.end());
        const CayleyMap m(res.candidates.front().map.group_ptr(), rot);
        const bool skew = construct_skew(m).has_value(), dart = is_regular(m);
        ++perturbed;
        if (skew != dart) ++disagree;
        if (dart) {
          ++perturbed_regular;
          if (!kernel_conjugation_check(m)) ++conj_fail;
        }
      };
      if (rest.size() <= 5) {
        do test(rest);
        while (std::next_permutation(rest.begin(), rest.end()));
      } else {
        for (int i = 0; i < 120; ++i) {
          std::shuffle(rest.begin(), rest.end(), rng);
          test(rest);
        }
      }
    }
    opt.keep_candidates = false;
    opt.oracle = RegularityOracle::dart;
    const auto by_dart = classify(n, opt);
    bool same = by_dart.classes.size() == res.classes.size();
    for (std::size_t i = 0; same && i < res.classes.size(); ++i)
      same = res.classes[i].key == by_dart.classes[i].key;
    std::ostringstream detail;
    detail << res.candidates.size() << " candidates, " << regular << " regular, " << perturbed
           << " reordered rotations, " << perturbed_regular << " regular, " << disagree
           << " oracle disagreements, " << conj_fail << " kernel conjugation failures, classes "
           << (same ? "identical" : "DIFFER") << " under both oracles";
    rep.lines.push_back({"n=" + std::to_string(n), disagree == 0 && conj_fail == 0 && same, detail.str()});
  }
  return rep;
}

}  // namespace skewmaps
