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

// Smallest minimal supports. A support of (rule, w) on a complete
// tournament T is a sub-weighting X of T under which w wins in every
// completion; it is minimal when no single weight unit can be removed, and
// smallest when no support has a smaller total weight.

#ifndef TSMS_SMS_H_
#define TSMS_SMS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tsms/model.h"
#include "tsms/rules.h"

namespace tsms {

enum class Variant { kShortestPaths, kMaxwin, kExact };

std::string_view variant_name(Variant v);  // "shortest-paths", "maxwin", "exact"
std::optional<Variant> parse_variant(std::string_view name);
Variant default_variant(Rule rule);

struct Support {
  PartialTournament partial;
  Rule rule;
  Candidate winner;
};

struct SmsResult {
  Support support;
  Weight size = 0;
  Variant variant = Variant::kMaxwin;
  Weight win_count = 0;  // sum over c of mu_X(w, c)
  // False only when the exact search ran out of budget; the support is then
  // the best minimal support found.
  bool optimal = true;
  std::uint64_t nodes = 0;  // search nodes visited (exact variant)
};

// Throws NotAWinner (naming the actual winners) unless w wins under rule.
void require_winner(Rule rule, const WeightedTournament& t, Candidate w);

SmsResult sms_tc(const WeightedTournament& t, Candidate w);
SmsResult sms_uc(const WeightedTournament& t, Candidate w);
SmsResult sms_cop(const WeightedTournament& t, Candidate w);
SmsResult sms_borda(const WeightedTournament& t, Candidate w);
SmsResult sms_mm(const WeightedTournament& t, Candidate w);

inline constexpr std::uint64_t kDefaultWucBudget = 1'000'000;

// Exact branch-and-bound. Among equal-size optima it prefers supports with
// fewer relay opponents (won by w below strict majority), which makes it
// return an out-tree whenever an out-tree optimum exists.
SmsResult sms_wuc_exact(const WeightedTournament& t, Candidate w,
                        std::uint64_t budget = kDefaultWucBudget);

SmsResult compute_sms(Rule rule, const WeightedTournament& t, Candidate w,
                      std::uint64_t wuc_budget = kDefaultWucBudget);

struct SizeFormulaInput {
  Rule rule = Rule::kTopCycle;
  Weight n = 1;
  int m = 1;
  Weight sigma_w = 0;   // w's score under the rule
  Weight min_out = 0;   // min over c != w of mu(w,c)
  Weight k = 0;         // maximin only: #{c != w : mu(w,c) >= n - t}
  std::vector<Weight> winner_row;  // mu(w,c) for c != w (Borda only)
};

// Closed interval; lo == hi for every rule with a closed form.
struct SizeRange {
  Weight lo = 0;
  Weight hi = 0;
  bool exact() const { return lo == hi; }
  bool contains(Weight v) const { return lo <= v && v <= hi; }
};

SizeFormulaInput size_formula_input(Rule rule, const WeightedTournament& t,
                                    Candidate w);

// Exact SMS size for TC, UC, COP, BORDA and MM. For WUC, the bound interval
// [n+m-2, (n+1)(m-1)] when m >= 3, and the exact value for m <= 2.
// Throws InvalidArgument on inconsistent input.
SizeRange sms_size_formula(const SizeFormulaInput& in);

// Worst-case size range of an SMS over all tournaments with n voters and m
// candidates (m >= 3).
SizeRange table_bounds(Rule rule, Weight n, int m);

enum class Verdict { kValidMs, kNotNecessary, kNotMinimal };
std::string_view verdict_name(Verdict v);  // "valid-MS", ...

struct Unit {
  Candidate from;
  Candidate to;
};

struct Verification {
  Verdict verdict;
  // kNotMinimal: a unit whose removal keeps w a necessary winner.
  std::optional<Unit> removable;
  // kNotNecessary: a completion in which w loses, when one is within the
  // enumeration guard.
  std::optional<WeightedTournament> counterexample;
};

// Throws InvalidArgument on mismatched candidates or voters and
// NotASubTournament when the claim is not dominated by t.
Verification verify_support(const WeightedTournament& t, const Support& claim,
                            std::uint64_t guard = 100'000);

// True iff removing any single unit breaks necessity.
bool is_unit_minimal(const PartialTournament& x, Candidate w, Rule rule);

Weight win_count(const PartialTournament& x, Candidate w);

}  // namespace tsms

#endif  // TSMS_SMS_H_
