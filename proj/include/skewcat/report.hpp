#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace skewcat {

using Json = nlohmann::json;

/// Malformed input: tables out of range, components with the wrong endpoints,
/// composites requested for non-composable pairs. Distinct from a law failing.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not satisfy its hypotheses
/// (a required inverse is missing, a map is not injective, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of checking one law (an axiom, a naturality family, ...) over a
/// set of instances. Every failing instance is recorded.
struct LawCheck {
  std::string name;
  std::size_t instances = 0;
  std::vector<Json> violations;

  bool ok() const { return violations.empty(); }
};

/// A list of law checks. Empty violations everywhere means the object passed.
class LawReport {
 public:
  LawCheck& law(const std::string& name) {
    for (auto& c : checks_)
      if (c.name == name) return c;
    checks_.push_back(LawCheck{name, 0, {}});
    return checks_.back();
  }

  // Registers one instance of `name` and records a violation if `holds` is false.
  void record(const std::string& name, bool holds, const Json& witness) {
    auto& c = law(name);
    ++c.instances;
    if (!holds) c.violations.push_back(witness);
  }

  void merge(const LawReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) {
      auto& mine = law(prefix + c.name);
      mine.instances += c.instances;
      mine.violations.insert(mine.violations.end(), c.violations.begin(), c.violations.end());
    }
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.ok()) return false;
    return true;
  }

  std::size_t violation_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.violations.size();
    return n;
  }

  const LawCheck* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const auto* c = find(name);
    return c != nullptr && c->ok();
  }

  bool failed(const std::string& name) const {
    const auto* c = find(name);
    return c != nullptr && !c->ok();
  }

  const std::vector<LawCheck>& checks() const { return checks_; }

  // Serialises at most `witness_cap` witnesses per law.
  Json to_json(std::size_t witness_cap = 20) const;

 private:
  std::vector<LawCheck> checks_;
};

inline Json LawReport::to_json(std::size_t witness_cap) const {
  Json out = Json::array();
  for (const auto& c : checks_) {
    Json entry{{"law", c.name},
               {"instances", c.instances},
               {"violations", c.violations.size()},
               {"status", c.ok() ? "pass" : "fail"}};
    if (!c.ok()) {
      Json w = Json::array();
      for (std::size_t i = 0; i < c.violations.size() && i < witness_cap; ++i)
        w.push_back(c.violations[i]);
      entry["witnesses"] = std::move(w);
      if (c.violations.size() > witness_cap) entry["truncated"] = true;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace skewcat
