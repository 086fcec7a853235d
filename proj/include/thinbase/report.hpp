#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace thinbase {

// One named verification outcome. A failing check carries a concrete witness
// (the offending element, label or missing value) in text form.
struct Check {
  std::string property;
  bool pass = true;
  std::string witness;
};

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

inline const Check* first_failure(const std::vector<Check>& checks) {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [](const Check& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace thinbase
