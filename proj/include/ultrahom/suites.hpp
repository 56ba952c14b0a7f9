#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ultrahom/caps.hpp"
#include "ultrahom/report.hpp"

namespace ultrahom {

struct SuiteConfig {
  Caps caps;
  unsigned workers = 1;
  /// Tower cache for the suites that build the tower.
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t seed = 20240601;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// Every suite, in the order `run_all_suites` runs them.
const std::vector<SuiteInfo>& suite_catalog();

/// Runs one suite by name. Throws InputError for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config = {});

/// Every suite; the reports are returned in catalog order.
std::vector<VerificationReport> run_all_suites(const SuiteConfig& config = {});

}  // namespace ultrahom
