#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultrahom/amalgam.hpp"
#include "ultrahom/construct_json.hpp"
#include "ultrahom/error.hpp"
#include "ultrahom/group_json.hpp"
#include "ultrahom/perm_json.hpp"
#include "ultrahom/suites.hpp"
#include "ultrahom/theorems.hpp"
#include "ultrahom/tower.hpp"

using namespace ultrahom;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kCapExceeded = 3 };

struct Config {
  std::string cache_dir;
  std::size_t max_degree = Caps{}.degree;
  std::size_t max_enum = Caps{}.enumeration;
  std::size_t max_neumann = Caps{}.neumann_degree;
  unsigned workers = 1;
  bool json_output = false;

  Caps caps() const {
    Caps c;
    c.degree = max_degree;
    c.enumeration = max_enum;
    c.neumann_degree = max_neumann;
    return c;
  }
  std::optional<std::filesystem::path> cache() const {
    if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
    return std::nullopt;
  }
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

/// A Cayley table file, or a permutation group file that is enumerated.
FiniteGroup load_group(const std::string& path, const Caps& caps) {
  json j = read_json(path);
  try {
    if (j.contains("table")) return finite_group_from_json(j);
    PermGroup G = group_from_json(j);
    std::string name = j.value("name", std::filesystem::path(path).stem().string());
    return FiniteGroup::from_permutations(G.degree(), G.generators(), caps.finite_group, name);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

GroupHomomorphism load_embedding(const std::string& path, const FiniteGroup& A, const FiniteGroup& B) {
  json j = read_json(path);
  const json& m = j.is_array() ? j : j.at("map");
  GroupHomomorphism f{A, B, m.get<std::vector<Elem>>()};
  if (f.map.size() != A.order()) throw InputError(path + ": map has the wrong length");
  for (Elem x : f.map)
    if (x >= B.order()) throw InputError(path + ": image " + std::to_string(x) + " outside the target");
  if (!f.is_homomorphism() || !f.is_injective()) throw InputError(path + ": not an injective homomorphism");
  return f;
}

/// Pairs as element indices, or as permutations resolved with `index`.
std::vector<std::pair<Elem, Elem>> load_pairs(const std::string& path,
                                              const std::function<Elem(const Perm&)>& index) {
  json j = read_json(path);
  const json& list = j.is_array() ? j : j.at("pairs");
  std::vector<std::pair<Elem, Elem>> pairs;
  auto one = [&](const json& x) -> Elem {
    if (x.is_number_unsigned()) return x.get<Elem>();
    if (!index) throw InputError(path + ": expected element indices");
    return index(x.get<Perm>());
  };
  for (const json& p : list) {
    if (!p.is_array() || p.size() != 2) throw InputError(path + ": each pair must have two entries");
    pairs.emplace_back(one(p[0]), one(p[1]));
  }
  return pairs;
}

void print_warnings(const Tower& tower) {
  for (const auto& w : tower.warnings()) std::cerr << "warning: " << w << '\n';
}

int cmd_tower(const Config& cfg, std::size_t max_level) {
  TowerOptions opt;
  opt.cache_dir = cfg.cache();
  opt.caps = cfg.caps();
  Tower tower(max_level, opt);
  print_warnings(tower);
  json levels = json::array();
  for (std::size_t n = 0; n <= tower.max_level(); ++n) {
    const TowerLevel& L = tower.level(n);
    json e{{"level", n}, {"degree", L.group.degree()}, {"order", L.group.order().str()},
           {"enumerated", L.elements.has_value()}, {"from_cache", L.from_cache}};
    if (!L.content_hash.empty()) e["content_hash"] = L.content_hash;
    levels.push_back(e);
    if (!cfg.json_output) {
      std::string order = L.group.order().str();
      if (order.size() > 20) order = std::to_string(L.group.degree()) + "! (" + std::to_string(order.size()) + " digits)";
      std::cout << "level " << n << ": Sym(" << L.group.degree() << "), order " << order
                << (L.from_cache ? ", loaded from cache" : "") << '\n';
    }
  }
  if (cfg.json_output) std::cout << json{{"levels", levels}, {"warnings", tower.warnings()}}.dump(2) << '\n';
  return kOk;
}

int cmd_witness(const Config& cfg, std::size_t level, const std::string& pairs_path, const std::string& out) {
  TowerOptions opt;
  opt.cache_dir = cfg.cache();
  opt.caps = cfg.caps();
  Tower tower(std::min<std::size_t>(level + 1, 2), opt);
  print_warnings(tower);
  auto pairs = load_pairs(pairs_path, [&](const Perm& g) { return tower.index_of(level, g); });
  std::optional<PartialAutomorphism> validated;
  try {
    validated = validate_partial_automorphism(tower.finite(level), pairs);
  } catch (const RejectedPairing& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  const PartialAutomorphism& p = *validated;
  WitnessCertificate cert = p.is_identity() ? WitnessCertificate{} : inner_uh_witness(tower, level, p);
  if (p.is_identity()) {
    // The identity of the next level conjugates every element to itself.
    cert.ambient = tower.level(level + 1).group;
    cert.witness = Perm(cert.ambient.degree());
    cert.tag = "inner-uh";
    for (Elem d : p.domain) {
      Perm u = tower.up(level, tower.finite(level).realization()[d]);
      cert.equations.emplace_back(u, u);
    }
  }
  json j = certificate_to_json(cert);
  j["verified"] = cert.verify();
  write_output(out, j);
  if (cfg.json_output) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "witness in Sym(" << cert.witness.degree() << "), " << cert.equations.size() << " equations, "
              << (j["verified"].get<bool>() ? "verified" : "NOT verified") << '\n';
    if (!out.empty()) std::cout << "certificate written to " << out << '\n';
  }
  return j["verified"].get<bool>() ? kOk : kVerificationFailed;
}

struct AmalgamArgs {
  std::string a, b, c, iab, iac, p, q, out;
};

int cmd_amalgam(const Config& cfg, const AmalgamArgs& args) {
  const Caps caps = cfg.caps();
  FiniteGroup A = load_group(args.a, caps), B = load_group(args.b, caps), C = load_group(args.c, caps);
  GroupHomomorphism iAB = load_embedding(args.iab, A, B), iAC = load_embedding(args.iac, A, C);
  if (args.p.empty() != args.q.empty()) throw InputError("--p and --q must be given together");
  AmalgamResult r;
  if (args.p.empty()) {
    r = neumann_amalgam(A, B, C, iAB, iAC, caps);
  } else {
    auto p = validate_partial_automorphism(B, load_pairs(args.p, {}));
    auto q = validate_partial_automorphism(C, load_pairs(args.q, {}));
    r = eppa_amalgam_with_automorphisms(A, B, C, iAB, iAC, {p}, {q}, caps);
  }
  json j = amalgam_to_json(r);
  write_output(args.out, j);
  bool witnesses_ok = true;
  for (const auto& w : r.witnesses) witnesses_ok &= w.verify();
  if (cfg.json_output) {
    std::cout << j.dump(2) << '\n';
  } else {
    if (r.complete)
      std::cout << "degree " << r.D.degree() << ", |A| = " << A.order() << ", intersection "
                << (!r.intersection_checked ? "not checked" : r.intersection_exact ? "exactly A" : "LARGER than A")
                << '\n';
    std::cout << "completed stages:";
    for (std::size_t i = 0; i < r.stages.size(); ++i) std::cout << (i ? "; " : " ") << r.stages[i];
    std::cout << '\n';
    if (!r.witnesses.empty()) std::cout << r.witnesses.size() << " witness(es), " << (witnesses_ok ? "verified" : "NOT verified") << '\n';
    if (!r.complete) std::cout << "stopped: " << r.stopped << '\n';
  }
  if (!r.complete) return kCapExceeded;
  return (r.intersection_checked && !r.intersection_exact) || !witnesses_ok ? kVerificationFailed : kOk;
}

void print_report(const VerificationReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases.size() - r.failures() << '/'
            << r.cases.size() << " cases (" << static_cast<long>(r.wall_time_ms) << " ms)\n";
  std::size_t shown = 0;
  for (const auto& c : r.cases)
    if (!c.pass && shown++ < 5)
      std::cout << "  failed " << c.key << ": expected " << c.expected.dump() << ", got " << c.actual.dump() << '\n';
  if (r.failures() > 5) std::cout << "  ... " << r.failures() - 5 << " more\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
  std::cout.flush();
}

int cmd_verify(const Config& cfg, const std::string& suite, const std::string& out, bool list) {
  if (list) {
    for (const auto& s : suite_catalog()) std::cout << s.name << "  " << s.description << '\n';
    return kOk;
  }
  SuiteConfig sc;
  sc.caps = cfg.caps();
  sc.workers = std::max(1u, cfg.workers);
  sc.cache_dir = cfg.cache();
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    for (const auto& s : suite_catalog()) {
      reports.push_back(run_suite(s.name, sc));
      if (!cfg.json_output) print_report(reports.back());
    }
  } else {
    reports.push_back(run_suite(suite, sc));
    if (!cfg.json_output) print_report(reports.back());
  }
  bool ok = true;
  for (const auto& r : reports) ok &= r.passed();
  json j;
  if (reports.size() == 1) {
    j = report_to_json(reports[0]);
  } else {
    j = json{{"suite", "all"}, {"passed", ok}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
  }
  write_output(out, j);
  if (cfg.json_output) std::cout << j.dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_check_group(const Config& cfg, const std::string& path) {
  FiniteGroup G = load_group(path, cfg.caps());
  InnerUHResult r = check_inner_ultrahomogeneous(G);
  json j{{"group", G.name()}, {"order", G.order()}, {"abelian", G.is_abelian()},
         {"inner_ultrahomogeneous", r.holds}, {"partial_automorphisms", r.partial_automorphisms}};
  if (r.counterexample) j["unwitnessed_pairs"] = *r.counterexample;
  if (cfg.json_output) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << G.name() << ": order " << G.order() << (G.is_abelian() ? ", abelian" : ", nonabelian") << ", "
              << (r.holds ? "inner ultrahomogeneous" : "not inner ultrahomogeneous") << " ("
              << r.partial_automorphisms << " subgroup isomorphisms examined)\n";
    if (r.counterexample) std::cout << "  no conjugator for " << json(*r.counterexample).dump() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite approximations of inner ultrahomogeneous groups, with certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (const char* env = std::getenv("ULTRAHOM_CACHE")) cfg.cache_dir = env;
  app.add_option("--cache-dir", cfg.cache_dir, "tower cache directory (default $ULTRAHOM_CACHE)");
  app.add_option("--max-degree", cfg.max_degree, "largest witness degree")->check(CLI::PositiveNumber);
  app.add_option("--max-enum", cfg.max_enum, "largest enumerated group")->check(CLI::PositiveNumber);
  app.add_option("--max-neumann", cfg.max_neumann, "largest permutational product")->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "worker threads for verification suites")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json_output, "print JSON instead of text");

  std::size_t max_level = 1;
  auto* tower = app.add_subcommand("tower", "build or load the tower S3 < Sym(6) < Sym(720)");
  tower->add_option("--max-level", max_level, "highest level (at most 2)");

  std::size_t level = 0;
  std::string pairs, witness_out;
  auto* witness = app.add_subcommand("witness", "conjugating witness one level up for a partial automorphism");
  witness->add_option("--level", level, "tower level of the pairs (0 or 1)");
  witness->add_option("--pairs", pairs, "JSON file with pairs of permutations or element indices")->required();
  witness->add_option("--out", witness_out, "certificate file");

  AmalgamArgs am;
  auto* amalgam = app.add_subcommand("amalgam", "amalgamate B and C over A");
  amalgam->add_option("--A", am.a, "group file")->required();
  amalgam->add_option("--B", am.b, "group file")->required();
  amalgam->add_option("--C", am.c, "group file")->required();
  amalgam->add_option("--iAB", am.iab, "embedding A -> B")->required();
  amalgam->add_option("--iAC", am.iac, "embedding A -> C")->required();
  amalgam->add_option("--p", am.p, "partial automorphism of B to extend");
  amalgam->add_option("--q", am.q, "partial automorphism of C to extend");
  amalgam->add_option("--out", am.out, "result file");

  std::string suite, verify_out;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite, or all of them");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_option("--out", verify_out, "report file");
  verify->add_flag("--list", list, "list the suites");

  std::string group_path;
  auto* check = app.add_subcommand("check-group", "decide inner ultrahomogeneity of a small group");
  check->add_option("group", group_path, "group file (Cayley table or permutation generators)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*tower) return cmd_tower(cfg, max_level);
    if (*witness) return cmd_witness(cfg, level, pairs, witness_out);
    if (*amalgam) return cmd_amalgam(cfg, am);
    if (*verify) {
      if (suite.empty() && !list) throw InputError("verify needs a suite name, 'all' or --list");
      return cmd_verify(cfg, suite, verify_out, list);
    }
    if (*check) return cmd_check_group(cfg, group_path);
  } catch (const CapExceeded& e) {
    std::cerr << "error: resource cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return kOk;
}
