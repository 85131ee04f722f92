#pragma once

#include <map>
#include <string>
#include <vector>

namespace orthokit {

// witnessed / not_witnessed are used where a finite instance can only exhibit
// existence, never refute it.
enum class Status { pass, fail, not_applicable, witnessed, not_witnessed };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
    case Status::witnessed: return "witnessed";
    case Status::not_witnessed: return "not_witnessed";
  }
  return "?";
}

inline bool is_failure(Status s) { return s == Status::fail || s == Status::not_witnessed; }

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> checks;
  std::map<std::string, double> timing_ms;  // kept apart so outputs stay comparable

  CheckResult& add(std::string name, Status status, std::string detail = {}, std::string witness = {}) {
    checks.push_back({std::move(name), status, std::move(detail), std::move(witness)});
    return checks.back();
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (const auto& [k, v] : other.timing_ms) timing_ms[k] += v;
  }

  bool passed() const {
    for (const auto& c : checks)
      if (is_failure(c.status)) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace orthokit
