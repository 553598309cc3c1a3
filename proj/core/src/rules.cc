// Copyright 2026 The tsms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsms/rules.h"

namespace tsms {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kTopCycle: return "tc";
    case Rule::kUncoveredSet: return "uc";
    case Rule::kCopeland: return "cop";
    case Rule::kBorda: return "borda";
    case Rule::kMaximin: return "mm";
    case Rule::kWeightedUncoveredSet: return "wuc";
  }
  return "?";
}

std::string_view rule_long_name(Rule rule) {
  switch (rule) {
    case Rule::kTopCycle: return "top cycle";
    case Rule::kUncoveredSet: return "uncovered set";
    case Rule::kCopeland: return "Copeland winners";
    case Rule::kBorda: return "Borda winners";
    case Rule::kMaximin: return "maximin set";
    case Rule::kWeightedUncoveredSet: return "weighted uncovered set";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

}  // namespace tsms
