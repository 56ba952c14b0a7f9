#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ultrahom {

/// One discrete check: passes iff expected == actual.
struct ReportCase {
  std::string key;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  /// What the suite establishes, e.g. "limit-level claim, finite shadow verified".
  std::string claim;
  std::vector<ReportCase> cases;
  std::vector<nlohmann::json> counterexamples;
  std::vector<std::string> notes;
  double wall_time_ms = 0;

  /// Records a case; a failing case is also copied to the counterexamples.
  void add(std::string key, nlohmann::json inputs, nlohmann::json expected, nlohmann::json actual);
  /// Shorthand for a boolean claim.
  void check(std::string key, nlohmann::json inputs, bool holds);
  /// Notes already present are not repeated.
  void append(VerificationReport other);
  bool passed() const;
  std::size_t failures() const;
};

nlohmann::json report_to_json(const VerificationReport& r);

/// Runs body(i) for i in [0, count) on `workers` threads, each filling its
/// own report; the partial reports are merged in index order, so the result
/// does not depend on scheduling. The first exception is rethrown.
VerificationReport parallel_cases(std::size_t count, unsigned workers,
                                  const std::function<void(std::size_t, VerificationReport&)>& body);

/// Measures the wall time of `fill` into report.wall_time_ms.
template <class F>
VerificationReport timed(std::string suite, std::string claim, F&& fill) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = fill();
  r.suite = std::move(suite);
  r.claim = std::move(claim);
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ultrahom
