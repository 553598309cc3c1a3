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

// Necessary winners of partial tournaments: w is a necessary winner of G
// when it wins in every completion of G.

#ifndef TSMS_NECESSARY_H_
#define TSMS_NECESSARY_H_

#include <vector>

#include "tsms/model.h"
#include "tsms/rules.h"

namespace tsms {

// Extremal Borda (or, at n = 1, Copeland) scores over all completions.
struct ScoreBounds {
  Candidate candidate;
  Weight min_score;  // present out-weight
  Weight max_score;  // n(m-1) minus present in-weight
};

struct ScoreMargin {
  Candidate winner;
  Candidate opponent;
  Weight delta;  // winner.min_score - opponent.max_score
};

// `rule` must be kBorda or kCopeland; kCopeland requires n = 1.
ScoreBounds score_bounds(const PartialTournament& g, Candidate c, Rule rule);

// One margin per opponent of w, in canonical order.
std::vector<ScoreMargin> score_margins(const PartialTournament& g, Candidate w,
                                       Rule rule);

// Polynomial rule-specific test. Throws InvalidArgument for TC/UC/COP when
// n != 1.
bool is_necessary_winner(const PartialTournament& g, Candidate w, Rule rule);

// Reference implementation over every completion; throws GuardExceeded when
// the completion count is above `guard`.
bool is_necessary_winner_bruteforce(
    const PartialTournament& g, Candidate w, Rule rule,
    std::uint64_t guard = kDefaultCompletionGuard);

}  // namespace tsms

#endif  // TSMS_NECESSARY_H_
