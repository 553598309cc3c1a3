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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.h"
#include "tsms/oracle.h"
#include "tsms/solutions.h"

namespace tsms {
namespace {

using ::testing::ElementsAre;
using fixtures::all_unweighted;
using fixtures::load;

// Relabels candidate c as perm[c].
WeightedTournament permute(const WeightedTournament& t,
                           const std::vector<Candidate>& perm) {
  PartialTournament g(default_candidates(t.size()), t.voters());
  for (Candidate x = 0; x < t.size(); ++x) {
    for (Candidate y = 0; y < t.size(); ++y) {
      if (x != y && t.weight(x, y) > 0) g.set_weight(perm[x], perm[y], t.weight(x, y));
    }
  }
  return WeightedTournament(std::move(g));
}

std::vector<Candidate> mapped(const std::vector<Candidate>& set,
                              const std::vector<Candidate>& perm) {
  std::vector<Candidate> out;
  for (Candidate c : set) out.push_back(perm[c]);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const WinnerSet& a, const WinnerSet& b) {
  return std::includes(b.winners.begin(), b.winners.end(), a.winners.begin(),
                       a.winners.end());
}

TEST(Solutions, UnweightedFixture) {
  const WeightedTournament t = load("unweighted4.trn");
  EXPECT_THAT(top_cycle(t).winners, ElementsAre(0, 1, 2));
  EXPECT_THAT(uncovered_set(t).winners, ElementsAre(0, 1, 2));
  const ScoredWinners cop = copeland(t);
  EXPECT_THAT(cop.table.scores, ElementsAre(2, 2, 2, 0));
  EXPECT_THAT(cop.winners.winners, ElementsAre(0, 1, 2));
  EXPECT_THAT(weighted_uncovered_set(t).winners, ElementsAre(0, 1, 2));
}

TEST(Solutions, CondorcetFixture) {
  const WeightedTournament t = load("condorcet5.trn");
  const ScoredWinners mm = maximin(t);
  EXPECT_THAT(mm.table.scores, ElementsAre(3, 2, 2, 0));
  EXPECT_THAT(mm.winners.winners, ElementsAre(0));
  const ScoredWinners b = borda(t);
  EXPECT_THAT(b.table.scores, ElementsAre(11, 8, 6, 5));
  EXPECT_THAT(b.winners.winners, ElementsAre(0));
  EXPECT_THAT(weighted_uncovered_set(t).winners, ElementsAre(0));
}

TEST(Solutions, CyclicFixture) {
  const WeightedTournament t = load("cyclic5.trn");
  EXPECT_THAT(borda(t).table.scores, ElementsAre(9, 8, 7, 6));
  EXPECT_THAT(borda(t).winners.winners, ElementsAre(0));
  EXPECT_THAT(maximin(t).table.scores, ElementsAre(2, 2, 2, 1));
  EXPECT_THAT(maximin(t).winners.winners, ElementsAre(0, 1, 2));
  EXPECT_THAT(weighted_uncovered_set(t).winners, ElementsAre(0, 1, 2));
}

TEST(Solutions, UnweightedRulesRejectWeights) {
  const WeightedTournament t = load("cyclic5.trn");
  EXPECT_THROW(top_cycle(t), InvalidArgument);
  EXPECT_THROW(uncovered_set(t), InvalidArgument);
  EXPECT_THROW(copeland(t), InvalidArgument);
  EXPECT_THROW(is_winner(Rule::kTopCycle, t, 0), InvalidArgument);
}

TEST(Solutions, InclusionsOnEveryFourCandidateTournament) {
  const auto all = all_unweighted(4);
  ASSERT_EQ(all.size(), 64u);
  for (const auto& t : all) {
    const WinnerSet tc = top_cycle(t);
    const WinnerSet uc = uncovered_set(t);
    const WinnerSet cop = copeland(t).winners;
    EXPECT_TRUE(subset(uc, tc));
    EXPECT_TRUE(subset(cop, uc));
    EXPECT_FALSE(cop.winners.empty());
    // At n = 1 the weighted rules collapse onto their unweighted ones.
    EXPECT_EQ(weighted_uncovered_set(t).winners, uc.winners);
    EXPECT_EQ(borda(t).winners.winners, cop.winners);
    EXPECT_EQ(borda(t).table.scores, copeland(t).table.scores);
  }
}

TEST(Solutions, InclusionsOnFiveCandidates) {
  for (const auto& t : all_unweighted(5)) {
    EXPECT_TRUE(subset(uncovered_set(t), top_cycle(t)));
    EXPECT_TRUE(subset(copeland(t).winners, uncovered_set(t)));
  }
}

TEST(Solutions, WeightedUncoveredSetMatchesCoveringForm) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const int m = 1 + static_cast<int>(seed % 6);
    const Weight n = 1 + static_cast<Weight>(seed % 7);
    const WeightedTournament t = random_tournament(m, n, seed);
    EXPECT_EQ(weighted_uncovered_set(t).winners,
              weighted_uncovered_set_by_covering(t).winners)
        << serialize(t);
  }
}

TEST(Solutions, OddVotersNeverEmpty) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const WeightedTournament t = random_tournament(5, 2 * (seed % 4) + 1, seed);
    for (Rule rule : {Rule::kBorda, Rule::kMaximin, Rule::kWeightedUncoveredSet}) {
      EXPECT_FALSE(winners(rule, t).winners.empty()) << serialize(t);
    }
  }
}

TEST(Solutions, EvenVotersCanEmptyTheWeightedUncoveredSet) {
  // Every pair tied: each candidate covers every other.
  PartialTournament g(default_candidates(3), 2);
  for (Candidate x = 0; x < 3; ++x) {
    for (Candidate y = 0; y < 3; ++y) {
      if (x != y) g.set_weight(x, y, 1);
    }
  }
  EXPECT_TRUE(weighted_uncovered_set(WeightedTournament(g)).winners.empty());
}

TEST(Solutions, PermutationEquivariance) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int m = 2 + static_cast<int>(seed % 5);
    const Weight n = seed % 3 == 0 ? 1 : 1 + static_cast<Weight>(seed % 6);
    const WeightedTournament t = random_tournament(m, n, seed);
    std::vector<Candidate> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
    const WeightedTournament u = permute(t, perm);
    for (Rule rule : kAllRules) {
      if (requires_unweighted(rule) && n != 1) continue;
      EXPECT_EQ(winners(rule, u).winners, mapped(winners(rule, t).winners, perm))
          << rule_name(rule) << "\n" << serialize(t);
    }
  }
}

TEST(Solutions, IsWinnerAgreesWithWinnerSets) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Weight n = seed % 2 ? 1 : 4;
    const WeightedTournament t = random_tournament(5, n, seed);
    for (Rule rule : kAllRules) {
      if (requires_unweighted(rule) && n != 1) continue;
      const WinnerSet set = winners(rule, t);
      for (Candidate c = 0; c < t.size(); ++c) {
        EXPECT_EQ(is_winner(rule, t, c), set.contains(c)) << rule_name(rule);
      }
    }
  }
}

TEST(Solutions, SingleCandidate) {
  const WeightedTournament one(PartialTournament(default_candidates(1), 1));
  for (Rule rule : kAllRules) {
    EXPECT_THAT(winners(rule, one).winners, ElementsAre(0)) << rule_name(rule);
  }
  EXPECT_THAT(maximin(one).table.scores, ElementsAre(1));
  EXPECT_THAT(borda(one).table.scores, ElementsAre(0));
}

TEST(Rules, NamesRoundTrip) {
  for (Rule rule : kAllRules) {
    EXPECT_EQ(parse_rule(rule_name(rule)), rule);
  }
  EXPECT_FALSE(parse_rule("plurality").has_value());
  EXPECT_EQ(rule_long_name(Rule::kUncoveredSet), "uncovered set");
}

}  // namespace
}  // namespace tsms
