#pragma once

#include <string>
#include <vector>

namespace toristack {

/// One itemized check: a failed check is data, not an exception.
struct Diagnostic {
  std::string check;
  bool passed = true;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  std::vector<Diagnostic> items;

  bool ok() const {
    for (const auto& d : items)
      if (!d.passed) return false;
    return true;
  }
  void pass(std::string check, std::string message = {}) {
    items.push_back({std::move(check), true, std::move(message)});
  }
  void fail(std::string check, std::string message) {
    items.push_back({std::move(check), false, std::move(message)});
  }
  bool passed(const std::string& check) const {
    bool seen = false;
    for (const auto& d : items)
      if (d.check == check) {
        if (!d.passed) return false;
        seen = true;
      }
    return seen;
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

}  // namespace toristack
