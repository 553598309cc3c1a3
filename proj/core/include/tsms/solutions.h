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

// Winner sets of the six tournament solutions on complete tournaments.
// Winner sets are sorted in canonical candidate order.

#ifndef TSMS_SOLUTIONS_H_
#define TSMS_SOLUTIONS_H_

#include <vector>

#include "tsms/model.h"
#include "tsms/rules.h"

namespace tsms {

struct WinnerSet {
  Rule rule;
  std::vector<Candidate> winners;

  bool contains(Candidate c) const;
};

struct ScoreTable {
  Rule rule;  // kCopeland, kBorda or kMaximin
  std::vector<Weight> scores;
};

struct ScoredWinners {
  ScoreTable table;
  WinnerSet winners;
};

// Throws InvalidArgument unless t has exactly one voter.
void require_unweighted(const WeightedTournament& t, Rule rule);

WinnerSet top_cycle(const WeightedTournament& t);
WinnerSet uncovered_set(const WeightedTournament& t);
ScoredWinners copeland(const WeightedTournament& t);
ScoredWinners borda(const WeightedTournament& t);
ScoredWinners maximin(const WeightedTournament& t);

// Path form: c wins iff for every other c'' either mu(c,c'') > mu(c'',c) or
// some c' has mu(c,c') > mu(c'',c'). May be empty when n is even and ties
// make every candidate covered.
WinnerSet weighted_uncovered_set(const WeightedTournament& t);

WinnerSet winners(Rule rule, const WeightedTournament& t);

// Membership tests that avoid computing the whole set where that is cheaper
// (single BFS for TC, one row scan for UC/WUC).
bool is_winner(Rule rule, const WeightedTournament& t, Candidate w);

}  // namespace tsms

#endif  // TSMS_SOLUTIONS_H_
