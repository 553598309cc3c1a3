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

// Brute-force ground truth and instance generators. Everything here is meant
// for small inputs and guards its enumeration size.

#ifndef TSMS_ORACLE_H_
#define TSMS_ORACLE_H_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tsms/model.h"
#include "tsms/rules.h"
#include "tsms/solutions.h"

namespace tsms {

// Number of sub-weightings of t: product over ordered pairs of mu(x,y)+1,
// saturating at UINT64_MAX.
std::uint64_t sub_weighting_count(const WeightedTournament& t);

// Visits every minimal support of (rule, w) on t. Sub-weightings are
// enumerated with ordered pairs in canonical order (first pair slowest) and
// each weight descending from mu(x,y) to 0. Stops when `visit` returns
// false. Throws GuardExceeded when sub_weighting_count(t) > guard.
void for_each_minimal_support(
    const WeightedTournament& t, Candidate w, Rule rule,
    const std::function<bool(const PartialTournament&)>& visit,
    std::uint64_t guard = kDefaultCompletionGuard);

std::vector<PartialTournament> enumerate_minimal_supports(
    const WeightedTournament& t, Candidate w, Rule rule,
    std::uint64_t guard = kDefaultCompletionGuard);

// Every minimal support of minimum total weight, in enumeration order.
std::vector<PartialTournament> smallest_minimal_supports(
    const WeightedTournament& t, Candidate w, Rule rule,
    std::uint64_t guard = kDefaultCompletionGuard);

// Minimum total weight over all minimal supports. Throws NotAWinner when w
// has no support at all.
Weight oracle_sms_size(const WeightedTournament& t, Candidate w, Rule rule,
                       std::uint64_t guard = kDefaultCompletionGuard);

// Weighted uncovered set through the covering relation: c covers x when
// mu(c,x) >= mu(x,c) and mu(c,z) >= mu(x,z) for every other z.
WinnerSet weighted_uncovered_set_by_covering(const WeightedTournament& t);

struct SetCoverInstance {
  int universe = 0;                        // elements 0..p-1
  std::vector<std::vector<int>> subsets;   // q subsets
};

// Throws InvalidArgument unless the subsets cover the universe, are
// non-empty, and none of them equals the universe.
void validate(const SetCoverInstance& inst);

// Smallest number of subsets whose union is the universe.
int minimum_cover_size(const SetCoverInstance& inst);

struct SetCoverTournament {
  WeightedTournament tournament;
  Candidate winner;
};

// The 2-weighted tournament over candidates w, e1..ep, s1..sq in which the
// weighted-uncovered-set SMS of w has size p + q + (minimum cover size).
SetCoverTournament build_setcover_tournament(const SetCoverInstance& inst);

// Seeded generator whose draws depend only on the 64-bit Mersenne Twister
// sequence, so instances are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [0, bound].
  std::uint64_t upto(std::uint64_t bound);
  bool coin() { return upto(1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Each pair {x,y}, x<y in canonical order, gets mu(x,y) uniform in [0,n].
WeightedTournament random_tournament(int m, Weight n, std::uint64_t seed);

// Each pair gets mu(x,y) uniform in [0,n] then mu(y,x) uniform in
// [0, n - mu(x,y)].
PartialTournament random_partial_tournament(int m, Weight n,
                                            std::uint64_t seed);

// p elements and q independent random subsets (repeats allowed), redrawn
// until the instance validates; p >= 2, q >= 2.
SetCoverInstance random_setcover(int p, int q, std::uint64_t seed);

}  // namespace tsms

#endif  // TSMS_ORACLE_H_
