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

#ifndef TSMS_RULES_H_
#define TSMS_RULES_H_

#include <array>
#include <optional>
#include <string_view>

namespace tsms {

enum class Rule {
  kTopCycle,
  kUncoveredSet,
  kCopeland,
  kBorda,
  kMaximin,
  kWeightedUncoveredSet,
};

inline constexpr std::array<Rule, 6> kAllRules = {
    Rule::kTopCycle, Rule::kUncoveredSet, Rule::kCopeland,
    Rule::kBorda,    Rule::kMaximin,      Rule::kWeightedUncoveredSet};

// "tc", "uc", "cop", "borda", "mm", "wuc".
std::string_view rule_name(Rule rule);
// Long form used in explanations, e.g. "uncovered set".
std::string_view rule_long_name(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

// TC, UC and COP are defined on unweighted tournaments only (n = 1).
constexpr bool requires_unweighted(Rule rule) {
  return rule == Rule::kTopCycle || rule == Rule::kUncoveredSet ||
         rule == Rule::kCopeland;
}

constexpr bool is_path_rule(Rule rule) {
  return rule == Rule::kTopCycle || rule == Rule::kUncoveredSet ||
         rule == Rule::kWeightedUncoveredSet;
}

constexpr bool is_score_rule(Rule rule) { return !is_path_rule(rule); }

}  // namespace tsms

#endif  // TSMS_RULES_H_
