#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewmaps/json_io.hpp"

using namespace skewmaps;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

GroupPtr parse_group_descriptor(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw InvalidArgument("group must look like dihedral:N");
  const std::string kind = descriptor.substr(0, colon);
  int param = 0;
  try {
    param = std::stoi(descriptor.substr(colon + 1));
  } catch (const std::exception&) {
    throw InvalidArgument("bad group parameter in '" + descriptor + "'");
  }
  if (kind == "dihedral") return dihedral(param);
  if (kind == "cyclic") return cyclic(param);
  if (kind == "swap_extension") return swap_extension(param);
  throw InvalidArgument("unknown group kind '" + kind + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

std::string cycles_text(const FiniteGroup& g, const Perm& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) out += (i ? " " : "") + g.label(cyc[i]);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string labels_text(const FiniteGroup& g, std::span<const Elem> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + g.label(xs[i]);
  return out + "}";
}

int print_report(const VerificationReport& r, bool as_json) {
  if (as_json) {
    for (const auto& l : r.lines) std::cout << check_to_json(r.title, l).dump() << "\n";
    std::cout << json{{"check", r.title}, {"summary", true}, {"pass", r.ok()}}.dump() << "\n";
  } else {
    std::cout << r.title << "\n";
    for (const auto& l : r.lines)
      std::cout << (l.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(22) << l.subject << " "
                << l.detail << "\n";
    std::cout << (r.ok() ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return r.ok() ? 0 : kExitFailed;
}

int cmd_skew_enumerate(const std::string& descriptor, bool as_json, int jobs) {
  const auto g = parse_group_descriptor(descriptor);
  const auto skews = enumerate_skew_morphisms(*g, {std::max(kDefaultSkewBound, g->order()), jobs});
  int automorphisms = 0;
  for (std::size_t i = 0; i < skews.size(); ++i) {
    const auto& s = skews[i];
    const auto k = kernel(*g, s);
    const bool aut = k.order() == g->order();
    automorphisms += aut;
    if (as_json) {
      json line = skew_to_json(*g, s);
      line["index"] = i;
      line["kernel"] = json::array();
      for (Elem x : k.elements()) line["kernel"].push_back(g->label(x));
      line["automorphism"] = aut;
      std::cout << line.dump() << "\n";
    } else {
      std::cout << std::right << std::setw(4) << i << "  order " << std::setw(3) << s.order << "  |ker| "
                << std::setw(3) << k.order() << "  " << cycles_text(*g, s.psi) << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"group", group_to_json(*g)}, {"count", skews.size()}, {"automorphisms", automorphisms}}.dump()
              << "\n";
  else
    std::cout << skews.size() << " skew-morphisms, " << automorphisms << " of them automorphisms\n";
  return 0;
}

int cmd_map_analyze(const std::string& file, bool as_json) {
  const auto m = map_from_json(read_json_file(file));
  const auto a = analyze(m);
  const auto& g = m.group();
  if (as_json) {
    std::cout << analysis_to_json(m, a).dump() << "\n";
    return 0;
  }
  std::cout << describe(m) << "\n";
  std::cout << "  regular      " << (a.regular ? "yes" : "no") << "\n";
  if (a.regular) {
    std::cout << "  order        " << a.skew->order << "\n";
    std::cout << "  kernel       " << labels_text(g, a.kernel.elements()) << "\n";
    std::cout << "  skew_type    " << a.skew_type << "\n";
    std::cout << "  balance      " << (a.balance ? std::to_string(*a.balance) : "-") << "\n";
    std::cout << "  |Aut|        " << a.automorphisms << "\n";
    std::cout << "  psi          " << cycles_text(g, a.skew->psi) << "\n";
  }
  return 0;
}

int cmd_map_quotient(const std::string& file, const std::string& normal, bool as_json) {
  const auto m = map_from_json(read_json_file(file));
  const auto& g = m.group();
  const auto gen = g.parse(normal);
  if (!gen) throw InvalidArgument("cannot parse element '" + normal + "'");
  const Elem gens[] = {*gen};
  const Subgroup n = subgroup_generated(g, gens);
  const auto q = quotient_map(m, n);
  const auto r = verify_quotient_laws(m, n);
  if (as_json) {
    json line = quotient_to_json(q, r);
    line["map"] = describe(m);
    line["normal"] = labels_text(g, n.elements());
    std::cout << line.dump() << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "NO"; };
    std::cout << describe(m) << " / <" << g.label(*gen) << ">\n";
    std::cout << "  quotient            " << describe(q.map) << "\n";
    std::cout << "  regular             " << yn(r.quotient_regular) << "\n";
    std::cout << "  |<psi>|             " << r.psi_order << " vs |N| |<psi'>| = " << r.normal_order << " * "
              << r.quotient_psi_order << "\n";
    std::cout << "  X union of cosets   " << (r.union_of_cosets ? "yes" : "no") << "\n";
    std::cout << "  order law           " << yn(r.order_bound && r.equality_rule) << "\n";
    std::cout << "  congruence          " << yn(r.congruence) << "\n";
    std::cout << "  coset action        " << yn(r.coset_action) << "\n";
    std::cout << "  |Aut| quotient      " << r.quotient_automorphisms << " (induced " << r.induced_action << ")\n";
    std::cout << "  quotient kernel     " << r.quotient_kernel << "\n";
  }
  return r.ok() ? 0 : kExitFailed;
}

int cmd_classify(int n, std::optional<int> kernel_filter, bool as_json, int jobs) {
  ClassifyOptions opt;
  opt.kernel = kernel_filter;
  opt.jobs = jobs;
  const auto res = classify(n, opt);
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    const auto& c = res.classes[i];
    if (as_json) {
      json line = class_to_json(c);
      line["n"] = n;
      line["index"] = i;
      std::cout << line.dump() << "\n";
    } else {
      std::cout << std::right << std::setw(3) << i << "  |X|=" << std::setw(2) << c.representative.valence()
                << "  |ker|=" << std::setw(2) << c.analysis.kernel.order() << "  t="
                << (c.analysis.balance ? std::to_string(*c.analysis.balance) : "-") << "  mirror=" << c.mirror
                << "  " << describe(c.representative) << (c.family ? "  = " + to_string(*c.family) : "") << "\n";
    }
  }
  if (as_json) {
    std::cout << json{{"n", n},
                      {"summary", true},
                      {"classes", res.classes.size()},
                      {"classes_with_reflection", res.reflection_classes()},
                      {"skew_morphisms", res.stats.skew_morphisms},
                      {"candidates", res.stats.candidates},
                      {"regular_candidates", res.stats.regular},
                      {"seconds", res.stats.seconds}}
                     .dump()
              << "\n";
  } else {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << res.stats.seconds;
    std::cout << res.classes.size() << " classes (" << res.reflection_classes() << " up to reflection) from "
              << res.stats.skew_morphisms << " skew-morphisms, " << res.stats.candidates << " candidates, "
              << secs.str() << " s\n";
  }
  return 0;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidArgument("bad list entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular Cayley maps on dihedral groups via skew-morphisms"};
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = 1;
  int result = 0;

  auto* skew = app.add_subcommand("skew", "skew-morphisms of a group");
  skew->require_subcommand(1);
  auto* skew_enum = skew->add_subcommand("enumerate", "list every skew-morphism");
  std::string group_descriptor;
  skew_enum->add_option("--group", group_descriptor, "dihedral:N, cyclic:N or swap_extension:M")->required();
  skew_enum->add_flag("--json", as_json, "one JSON object per line");
  skew_enum->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* map = app.add_subcommand("map", "single Cayley maps");
  map->require_subcommand(1);
  std::string file, normal;
  auto* analyze_cmd = map->add_subcommand("analyze", "regularity, skew-morphism and kernel");
  analyze_cmd->add_option("--file", file, "map descriptor JSON")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_flag("--json", as_json, "JSON output");
  auto* quotient_cmd = map->add_subcommand("quotient", "quotient by a normal subgroup");
  quotient_cmd->add_option("--file", file, "map descriptor JSON")->required()->check(CLI::ExistingFile);
  quotient_cmd->add_option("--normal", normal, "generator of N, e.g. a^4")->required();
  quotient_cmd->add_flag("--json", as_json, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "all regular Cayley maps on D_n up to equivalence");
  int n = 0;
  std::optional<int> kernel_filter;
  classify_cmd->add_option("--n", n, "n of D_n")->required();
  classify_cmd->add_option("--kernel", kernel_filter, "only classes with this kernel order");
  classify_cmd->add_flag("--json", as_json, "one JSON object per class");
  classify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "machine checks of the classification results");
  verify->require_subcommand(1);
  int max_n = 0;
  std::string n_list;
  auto* v_main = verify->add_subcommand("main", "maps with |kernel| = 4");
  v_main->add_option("--max-n", max_n)->required();
  auto* v_min = verify->add_subcommand("min", "minimum kernel size");
  v_min->add_option("--max-n", max_n)->required();
  auto* v_fam = verify->add_subcommand("families", "the two infinite families");
  v_fam->add_option("--n-list", n_list, "comma separated, e.g. 6,8,10")->required();
  auto* v_cfree = verify->add_subcommand("cfree", "core-free rotation subgroup");
  v_cfree->add_option("--n", n)->required();
  for (auto* v : {v_main, v_min, v_fam, v_cfree}) {
    v->add_flag("--json", as_json, "one JSON object per line");
    v->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*skew_enum) result = cmd_skew_enumerate(group_descriptor, as_json, jobs);
    else if (*analyze_cmd) result = cmd_map_analyze(file, as_json);
    else if (*quotient_cmd) result = cmd_map_quotient(file, normal, as_json);
    else if (*classify_cmd) result = cmd_classify(n, kernel_filter, as_json, jobs);
    else if (*v_main) result = print_report(verify_theorem_main(max_n, jobs), as_json);
    else if (*v_min) result = print_report(verify_theorem_min(max_n, jobs), as_json);
    else if (*v_fam) result = print_report(verify_family_lemmas(parse_list(n_list)), as_json);
    else if (*v_cfree) result = print_report(verify_cfree(n, jobs), as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}
