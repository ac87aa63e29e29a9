#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "skewmaps/catalog.hpp"
#include "skewmaps/quadruple.hpp"
#include "skewmaps/quotient.hpp"

using namespace skewmaps;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << x;
  return out.str();
}

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& l : r.lines)
    if (!l.pass) out += " [" + l.subject + ": " + l.detail + "]";
  return out;
}

Outcome classes_with_kernel_four() {
  auto t0 = std::chrono::steady_clock::now();
  const auto small = verify_theorem_main(8);
  const double small_time = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto full = verify_theorem_main(12);
  const double full_time = seconds_since(t0);
  const std::string counts = full.lines.back().detail;
  const bool pass = full.ok() && counts == "2,0,1,0,2,0,2,0,1,0,1" && small_time < 10 && full_time < 600;
  return {pass, "counts " + counts + " (expected 2,0,1,0,2,0,2,0,1,0,1), n<=8 in " + fixed(small_time) +
                    " s, n<=12 in " + fixed(full_time) + " s" + failures(full)};
}

Outcome minimum_kernel() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify_theorem_min(10);
  const double t = seconds_since(t0);
  return {r.ok() && t < 300, std::to_string(r.lines.size()) + " values of n in " + fixed(t) + " s" + failures(r)};
}

Outcome family_lemmas() {
  const auto r = verify_family_lemmas({6, 8, 10, 12, 14, 16});
  int map2 = 0;
  for (const auto& l : r.lines) map2 += l.subject.rfind("map2", 0) == 0;
  return {r.ok() && r.lines.size() == 8 && map2 == 2,
          std::to_string(r.lines.size()) + " family instances checked" + failures(r)};
}

Outcome oracle_agreement() {
  const auto r = verify_oracles(8);
  return {r.ok(), std::to_string(r.lines.size()) + " values of n, largest: " + r.lines.back().detail + failures(r)};
}

Outcome kernel_conjugation() {
  int maps = 0, bad = 0;
  for (int n = 2; n <= 8; ++n) {
    ClassifyOptions opt;
    opt.keep_candidates = true;
    for (const auto& c : classify(n, opt).candidates) {
      if (!c.regular_dart) continue;
      ++maps;
      bad += !kernel_conjugation_check(c.map);
    }
  }
  return {bad == 0 && maps > 0, std::to_string(maps) + " regular maps, " + std::to_string(bad) + " failures"};
}

Outcome quotient_laws() {
  bool pass = true;
  std::string detail;
  for (int n : {8, 16}) {
    const auto m = build_family({Family::map1, n});
    const auto& g = m.group();
    const Elem gens[] = {g.delem(n / 2, 0)};
    const auto normal = subgroup_generated(g, gens);
    const auto r = verify_quotient_laws(m, normal);
    const bool ok = r.ok() && r.union_of_cosets && r.psi_order == r.normal_order * r.quotient_psi_order &&
                    r.quotient_kernel == 4;
    pass = pass && ok;
    detail += "map1(" + std::to_string(n) + ")/<a^" + std::to_string(n / 2) + ">: " + (ok ? "ok" : "FAIL") +
              " |<psi>|=" + std::to_string(r.psi_order) + "=" + std::to_string(r.normal_order) + "*" +
              std::to_string(r.quotient_psi_order) + " kernel " + std::to_string(r.quotient_kernel) + "; ";
  }
  return {pass, detail};
}

Outcome quadruple_round_trip() {
  std::vector<CayleyMap> maps;
  for (int n = 2; n <= 6; ++n) {
    ClassifyOptions opt;
    opt.keep_candidates = true;
    for (const auto& c : classify(n, opt).candidates)
      if (c.regular_dart) maps.push_back(c.map);
  }
  int bad = 0;
  std::vector<RegularQuadruple> quads;
  for (const auto& m : maps) {
    auto rq = from_regular_map(m, 144);
    bad += !equivalent(m, induced_cayley_map(rq.quadruple).map).has_value();
    quads.push_back(std::move(rq));
  }
  std::mt19937_64 rng(20240601);
  int conj_bad = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng);
    const auto alpha = random_automorphism(*quads[k].quadruple.group, rng);
    const auto q = conjugate_quadruple(quads[k].quadruple, alpha);
    conj_bad += !equivalent(maps[k], induced_cayley_map(q).map).has_value();
  }
  return {bad == 0 && conj_bad == 0 && !maps.empty(),
          std::to_string(maps.size()) + " regular maps, " + std::to_string(bad) + " round-trip failures, " +
              std::to_string(conj_bad) + " of 20 conjugated quadruples inequivalent"};
}

Outcome core_free() {
  const auto six = verify_cfree(6);
  const auto ten = verify_cfree(10);
  const bool pass = six.ok() && ten.ok() && six.lines.size() == 2 && ten.lines.size() == 2 &&
                    six.lines[0].detail.find("|Aut|=72") != std::string::npos &&
                    six.lines[0].detail.find("isomorphic to swap_extension(3) via") != std::string::npos &&
                    ten.lines[0].detail.find("|Aut|=200") != std::string::npos;
  return {pass, "n=6: " + six.lines.front().detail + "; n=10: " + ten.lines.front().detail};
}

Outcome enumeration_oracle() {
  bool pass = true;
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {2, 3, 4}) {
    const auto g = dihedral(n);
    const auto naive = enumerate_skew_morphisms_naive(*g);
    const auto pruned = enumerate_skew_morphisms(*g);
    pass = pass && naive == pruned;
    detail += "D_" + std::to_string(n) + ": " + std::to_string(naive.size()) + "/" + std::to_string(pruned.size()) + "; ";
  }
  const double t = seconds_since(t0);
  return {pass && t < 60, detail + fixed(t) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"kernel-4 classification n=2..12", classes_with_kernel_four},
      {"minimum kernel n=2..10", minimum_kernel},
      {"family lemmas", family_lemmas},
      {"oracle equivalence n<=8", oracle_agreement},
      {"kernel conjugation identity n<=8", kernel_conjugation},
      {"quotient laws", quotient_laws},
      {"quadruple round trip n<=6", quadruple_round_trip},
      {"core-free case", core_free},
      {"pruned vs naive enumeration", enumeration_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
