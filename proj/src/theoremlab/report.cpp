#include "ultrahom/report.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace ultrahom {

void VerificationReport::add(std::string key, nlohmann::json inputs, nlohmann::json expected,
                             nlohmann::json actual) {
  ReportCase c{std::move(key), std::move(inputs), std::move(expected), std::move(actual), false};
  c.pass = c.expected == c.actual;
  if (!c.pass)
    counterexamples.push_back({{"key", c.key}, {"inputs", c.inputs}, {"expected", c.expected}, {"actual", c.actual}});
  cases.push_back(std::move(c));
}

void VerificationReport::check(std::string key, nlohmann::json inputs, bool holds) {
  add(std::move(key), std::move(inputs), true, holds);
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.cases) cases.push_back(std::move(c));
  for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
  for (auto& n : other.notes)
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(std::move(n));
}

bool VerificationReport::passed() const { return failures() == 0 && !cases.empty(); }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += !c.pass;
  return n;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"key", c.key}, {"inputs", c.inputs}, {"expected", c.expected}, {"actual", c.actual},
                     {"pass", c.pass}});
  return {{"suite", r.suite},
          {"claim", r.claim},
          {"passed", r.passed()},
          {"case_count", r.cases.size()},
          {"failure_count", r.failures()},
          {"cases", cases},
          {"counterexamples", r.counterexamples},
          {"notes", r.notes},
          {"wall_time_ms", r.wall_time_ms}};
}

VerificationReport parallel_cases(std::size_t count, unsigned workers,
                                  const std::function<void(std::size_t, VerificationReport&)>& body) {
  std::vector<VerificationReport> parts(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, parts[i]);
  } else {
    std::mutex m;
    std::size_t next = 0;
    std::exception_ptr error;
    auto run = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard lock(m);
          if (next >= count || error) return;
          i = next++;
        }
        try {
          body(i, parts[i]);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  VerificationReport out;
  for (auto& p : parts) out.append(std::move(p));
  return out;
}

}  // namespace ultrahom
