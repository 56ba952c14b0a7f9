#pragma once

#include <string>
#include <vector>

namespace ultrahom {

/// One named, discrete assertion with what was observed.
struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<NamedCheck> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  /// Names of failed checks, comma separated.
  std::string failures() const {
    std::string out;
    for (const auto& c : checks)
      if (!c.pass) out += (out.empty() ? "" : ", ") + c.name;
    return out;
  }
};

}  // namespace ultrahom
