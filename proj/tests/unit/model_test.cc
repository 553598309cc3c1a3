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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "tsms/io.h"
#include "tsms/model.h"
#include "tsms/oracle.h"

namespace tsms {
namespace {

using fixtures::load;
using fixtures::load_partial;

TEST(Parse, MinimalInput) {
  const PartialTournament g = parse_tournament("voters 1\ncandidates a b\na b 1\n");
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.voters(), 1);
  EXPECT_EQ(g.weight(0, 1), 1);
  EXPECT_EQ(g.weight(1, 0), 0);
  EXPECT_TRUE(is_complete(g));
}

TEST(Parse, UnweightedFixture) {
  const PartialTournament g = load_partial("unweighted4.trn");
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(is_complete(g));
  EXPECT_EQ(support_size(g), 6);
  const auto& c = g.candidates();
  EXPECT_EQ(g.weight(c.index_of("c"), c.index_of("a")), 1);
  EXPECT_EQ(g.weight(c.index_of("a"), c.index_of("c")), 0);
}

TEST(Parse, VotersDefaultToOne) {
  EXPECT_EQ(parse_tournament("candidates x y z\n").voters(), 1);
}

TEST(Parse, CommentsAndBlankLines) {
  const auto g = parse_tournament("# header\n\nvoters 3\n  \ncandidates a b\n# x\na b 2\n");
  EXPECT_EQ(g.weight(0, 1), 2);
  EXPECT_EQ(g.slack(0, 1), 1);
}

struct BadInput {
  const char* text;
  int line;
  const char* fragment;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportsLine) {
  const BadInput& bad = GetParam();
  try {
    parse_tournament(bad.text);
    FAIL() << "accepted: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_NE(std::string(e.what()).find(bad.fragment), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Model, ParseErrors,
    ::testing::Values(
        BadInput{"voters 2\ncandidates a b\na b 2\nb a 1\n", 4, "exceeds n=2"},
        BadInput{"candidates a a\n", 1, "duplicate candidate label"},
        BadInput{"candidates a b\na b 1\na b 1\n", 3, "duplicate pair"},
        BadInput{"voters 2\ncandidates a b\na b 3\n", 3, "outside [0, 2]"},
        BadInput{"candidates a b\na z 1\n", 2, "unknown candidate 'z'"},
        BadInput{"candidates a b\na b\n", 2, "malformed"},
        BadInput{"candidates a b\na b x\n", 2, "not an integer"},
        BadInput{"candidates a b\na a 0\n", 2, "self-pair"},
        BadInput{"candidates a b\nvoters 0\n", 2, "voter count"},
        BadInput{"candidates a b\na b 1\nvoters 1\n", 3, "must precede"},
        BadInput{"voters 1\nvoters 1\n", 2, "duplicate 'voters'"},
        BadInput{"voters 1\n", 0, "missing 'candidates'"}));

TEST(Serialize, CanonicalLayout) {
  const auto g = parse_tournament("voters 5\ncandidates a b c\nc a 2\na b 3\n");
  EXPECT_EQ(serialize(g), "voters 5\ncandidates a b c\na b 3\nc a 2\n");
}

TEST(Serialize, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PartialTournament g =
        random_partial_tournament(1 + static_cast<int>(seed % 7), 1 + seed % 6, seed);
    EXPECT_EQ(parse_tournament(serialize(g)), g) << serialize(g);
  }
}

TEST(Complete, Examples) {
  EXPECT_TRUE(is_complete(load_partial("condorcet5.trn")));
  EXPECT_FALSE(is_complete(load_partial("partial_two_step.trn")));
  EXPECT_TRUE(is_complete(PartialTournament(default_candidates(1), 4)));
  EXPECT_THROW(WeightedTournament(load_partial("partial_star.trn")),
               IncompleteTournament);
}

TEST(Extends, Examples) {
  const PartialTournament g = load_partial("unweighted4.trn");
  const PartialTournament x = load_partial("uc_tree_support.trn");
  EXPECT_TRUE(extends(x, g));
  EXPECT_TRUE(extends(g, g));
  EXPECT_FALSE(extends(g, x));
  // The two-step partial uses (a,c), which g orients the other way.
  EXPECT_FALSE(extends(load_partial("partial_two_step.trn"), g));
  EXPECT_THROW(extends(x, load_partial("condorcet5.trn")), InvalidArgument);
}

TEST(Extends, PartialOrderOnRandomTriples) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const WeightedTournament t = random_tournament(4, 3, seed);
    // Random chain of sub-weightings: h <= t, g <= h, plus an independent k.
    Rng rng(seed);
    PartialTournament h = t.partial();
    PartialTournament g = t.partial();
    PartialTournament k = t.partial();
    for (Candidate x = 0; x < 4; ++x) {
      for (Candidate y = 0; y < 4; ++y) {
        if (x == y) continue;
        const Weight hv = static_cast<Weight>(rng.upto(t.weight(x, y)));
        h.set_weight(x, y, hv);
        g.set_weight(x, y, static_cast<Weight>(rng.upto(hv)));
        k.set_weight(x, y, static_cast<Weight>(rng.upto(t.weight(x, y))));
      }
    }
    EXPECT_TRUE(extends(g, h));
    EXPECT_TRUE(extends(h, t.partial()));
    EXPECT_TRUE(extends(g, t.partial()));
    if (extends(h, k) && extends(k, h)) EXPECT_EQ(h, k);
    if (extends(g, k) && extends(k, h)) EXPECT_TRUE(extends(g, h));
    EXPECT_LE(support_size(g), support_size(h));
  }
}

TEST(SupportSize, Examples) {
  EXPECT_EQ(support_size(load_partial("partial_two_step.trn")), 3);
  EXPECT_EQ(support_size(PartialTournament(default_candidates(4), 2)), 0);
  const auto mm = parse_tournament(
      "voters 5\ncandidates a b c d\na b 3\na c 2\na d 3\nb c 3\n");
  EXPECT_EQ(support_size(mm), 11);
}

TEST(Completions, Counts) {
  EXPECT_EQ(enumerate_completions(load_partial("unweighted4.trn")).size(), 1u);
  EXPECT_EQ(enumerate_completions(PartialTournament(default_candidates(2), 1)).size(), 2u);
  EXPECT_EQ(enumerate_completions(PartialTournament(default_candidates(3), 1)).size(), 8u);
  EXPECT_EQ(completion_count(PartialTournament(default_candidates(3), 2)), 27u);
}

TEST(Completions, OrderAndDistinctness) {
  const auto all = enumerate_completions(PartialTournament(default_candidates(2), 1));
  EXPECT_EQ(all[0].weight(0, 1), 0);
  EXPECT_EQ(all[1].weight(0, 1), 1);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PartialTournament g = random_partial_tournament(4, 2, seed);
    const auto completions = enumerate_completions(g);
    EXPECT_EQ(completions.size(), completion_count(g));
    std::set<std::string> seen;
    for (const auto& t : completions) {
      EXPECT_TRUE(is_complete(t));
      EXPECT_TRUE(extends(g, t));
      EXPECT_TRUE(seen.insert(serialize(t)).second);
    }
  }
}

TEST(Completions, Guard) {
  const PartialTournament g(default_candidates(6), 3);  // 4^15 completions
  EXPECT_THROW(enumerate_completions(g), GuardExceeded);
  EXPECT_THROW(enumerate_completions(PartialTournament(default_candidates(3), 1), 7),
               GuardExceeded);
}

TEST(Model, InvariantsEnforced) {
  PartialTournament g(default_candidates(3), 2);
  g.set_weight(0, 1, 2);
  EXPECT_THROW(g.set_weight(1, 0, 1), InvalidArgument);
  EXPECT_THROW(g.set_weight(0, 2, 3), InvalidArgument);
  EXPECT_THROW(g.set_weight(0, 0, 1), InvalidArgument);
  EXPECT_THROW(PartialTournament(default_candidates(2), 0), InvalidArgument);
  EXPECT_THROW(CandidateSet({"a", "a"}), InvalidArgument);
  EXPECT_EQ(default_candidates(28).label(27), "c27");
}

}  // namespace
}  // namespace tsms
