// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exits 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <unistd.h>

#include "ultrahom/suites.hpp"

using namespace ultrahom;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double budget_seconds;
  /// Extra pinned conditions on the reports, returning a failure reason or "".
  std::function<std::string(const std::vector<VerificationReport>&)> pins;
};

std::size_t count_keys(const VerificationReport& r, const std::string& prefix) {
  return std::count_if(r.cases.begin(), r.cases.end(),
                       [&](const ReportCase& c) { return c.key.rfind(prefix, 0) == 0; });
}

std::string expect_count(const std::string& what, std::size_t actual, std::size_t expected) {
  if (actual == expected) return "";
  return what + " = " + std::to_string(actual) + ", expected " + std::to_string(expected);
}

std::string expect_at_least(const std::string& what, std::size_t actual, std::size_t minimum) {
  if (actual >= minimum) return "";
  return what + " = " + std::to_string(actual) + ", expected at least " + std::to_string(minimum);
}

const ReportCase* find_case(const VerificationReport& r, const std::string& key) {
  for (const auto& c : r.cases)
    if (c.key == key) return &c;
  return nullptr;
}

std::string first_failure(const std::vector<VerificationReport>& reports, std::size_t failures) {
  for (const auto& r : reports)
    for (const auto& k : r.cases)
      if (!k.pass) return std::to_string(failures) + " failing case(s), first: " + r.suite + " / " + k.key;
  return "";
}

std::vector<Criterion> criteria() {
  return {
      {1, "inner ultrahomogeneous groups of order <= 24 are exactly 1, Z/2, S3", {"inner-uh-small"}, 60,
       [](const auto& r) {
         const ReportCase* c = find_case(r[0], "groups found inner ultrahomogeneous");
         if (!c) return std::string("summary case missing");
         return expect_count("groups in corpus", r[0].cases.size() - 1, 74);
       }},
      {2, "Hall witnesses exact for partial automorphisms with |dom| <= 8, |G| <= 16", {"hall-witness"}, 300,
       [](const auto& r) { return expect_at_least("cases", r[0].cases.size(), 1000); }},
      {3, "Neumann amalgam intersections exact for |B|, |C| <= 12", {"neumann-amalgam"}, 120,
       [](const auto& r) { return expect_at_least("triples", r[0].cases.size(), 100); }},
      {4, "amalgam with automorphisms for Z/2 <= Z/4, Z/2 x Z/2", {"eppa-amalgam"}, 60,
       [](const auto& r) {
         for (const char* key : {"b^g = p(b) on the domain of p", "c^g = q(c) on the domain of q"})
           if (!find_case(r[0], key)) return std::string("missing case: ") + key;
         return std::string();
       }},
      {5, "n-cycle identity for n = 3..12 and order products on n 2..6, m 1..8", {"ncycle-identity", "order-product"},
       120,
       [](const auto& r) {
         std::string e = expect_count("n-cycle cases", r[0].cases.size(), 10);
         return e.empty() ? expect_count("order-product grid", r[1].cases.size(), 40) : e;
       }},
      {6, "exact k-th roots for 200 samples with k ord(g) <= 720", {"nth-root"}, 120,
       [](const auto& r) { return expect_count("samples", r[0].cases.size(), 200); }},
      {7, "sigma/tau for k <= 6, m <= 3; sigma_f for n <= 8; prime peeling to 10^6",
       {"sigma-families", "prime-peeling"}, 300,
       [](const auto& r) {
         std::size_t st = count_keys(r[0], "sigma/tau k="), sf = count_keys(r[0], "sigma_f n=");
         if (!st || !sf) return std::string("sigma/tau or sigma_f cases missing");
         return find_case(r[1], "every order up to 10^6") ? std::string() : std::string("peeling case missing");
       }},
      {8, "automorphisms fixing each non-generator of odd abelian groups of order <= 225", {"odd-abelian"}, 120,
       [](const auto& r) { return expect_at_least("groups", r[0].cases.size(), 100); }},
      {9, "omitted type N 2..6, 50 centralizer gaps, 512 commuting patterns, straight maximality {3,5,7}",
       {"omitted-type", "centralizer-gap", "commuting-pattern", "straight-maximality"}, 600,
       [](const auto& r) {
         std::string e = expect_count("centralizer-gap samples", count_keys(r[1], "sample "), 50);
         if (e.empty()) e = expect_count("3x3 matrices", count_keys(r[2], "3x3 matrix "), 512);
         if (e.empty()) e = expect_at_least("S_p size cases", count_keys(r[3], "|S_"), 3);
         return e;
       }},
      {10, "tower witnesses: all of S3's partial automorphisms, 1000 same-order pairs", {"tower-service"}, 300,
       [](const auto& r) {
         const ReportCase* c = find_case(r[0], "same-order pairs conjugated one level up");
         if (!c) return std::string("pair case missing");
         return expect_at_least("pairs", c->inputs.at("pairs").get<std::size_t>(), 1000);
       }},
      {11, "centralizer and validation cross-oracles", {"centralizer-oracle", "validation-oracle"}, 600,
       [](const auto& r) {
         std::string e = expect_at_least("centralizer cases", r[0].cases.size(), 100);
         return e.empty() ? expect_at_least("validation groups", r[1].cases.size(), 20) : e;
       }},
  };
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const fs::path cache = fs::temp_directory_path() / ("ultrahom-acceptance-" + std::to_string(::getpid()));
  SuiteConfig config;
  config.cache_dir = cache;
  config.workers = 1;

  int failed = 0;
  double total = 0;
  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::string reason;
    try {
      for (const auto& s : c.suites) reports.push_back(run_suite(s, config));
    } catch (const std::exception& e) {
      reason = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    std::size_t cases = 0, failures = 0;
    for (const auto& r : reports) {
      cases += r.cases.size();
      failures += r.failures();
    }
    if (reason.empty() && failures) reason = first_failure(reports, failures);
    if (reason.empty()) reason = c.pins(reports);
    if (reason.empty() && seconds > c.budget_seconds) reason = "over budget";
    const bool pass = reason.empty();
    failed += !pass;
    std::printf("%s criterion %2d: %s [%zu cases, %.1f s / %.0f s]%s%s\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), cases, seconds, c.budget_seconds, pass ? "" : " -- ", reason.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 11 criteria passed in %.1f s (budget 2700 s)\n", 11 - failed, total);
  std::error_code ec;
  fs::remove_all(cache, ec);
  return failed == 0 && total <= 2700 ? 0 : 1;
}
