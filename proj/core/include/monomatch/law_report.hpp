#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monomatch {

struct LawResult {
  std::string law;
  std::size_t trials = 0;  // cases actually evaluated
  bool passed = true;
  // Rendered arguments of the first failing case, after shrinking.
  std::optional<std::string> counterexample;
};

struct LawReport {
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(const std::string& law) const;

  // One line per law:
  //   law=<name> trials=<n> result=pass
  //   law=<name> trials=<n> result=fail counterexample=<text>
  std::string to_text() const;
  // {"laws":[{"law":..,"trials":..,"passed":..,"counterexample":..|null}],"passed":..}
  std::string to_json() const;
};

}  // namespace monomatch
