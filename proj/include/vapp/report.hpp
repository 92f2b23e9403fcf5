#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vapp {

/// One broken law together with the witness tuple that breaks it.
struct Violation {
  std::string law;
  std::string witness;
};

/// Outcome of a law scan; empty means every checked law holds.
struct LawReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }

  void merge(const LawReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.law + " [" + v.witness + "]";
    }
    return s;
  }
};

/// Malformed input: missing table entries, unknown labels, size mismatches.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A requested operation whose precondition the input cannot meet
/// (e.g. an approach-mode tower check over a non-ccd quantale).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vapp
