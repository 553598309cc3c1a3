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

#include <fstream>
#include <regex>
#include <sstream>

#include "fixtures.h"
#include "tsms/explain.h"
#include "tsms/necessary.h"
#include "tsms/oracle.h"
#include "tsms/sms.h"
#include "tsms/solutions.h"

namespace tsms {
namespace {

using fixtures::data_path;
using fixtures::load;
using fixtures::load_partial;

std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string explain(const char* file, Rule rule) {
  return render_text(extract_structure(compute_sms(rule, load(file), 0)));
}

struct TextCase {
  const char* file;
  Rule rule;
  const char* expected;
};

class ExpectedText : public ::testing::TestWithParam<TextCase> {};

TEST_P(ExpectedText, MatchesFile) {
  const TextCase& tc = GetParam();
  EXPECT_EQ(explain(tc.file, tc.rule), slurp(tc.expected));
}

INSTANTIATE_TEST_SUITE_P(
    Examples, ExpectedText,
    ::testing::Values(
        TextCase{"unweighted4.trn", Rule::kTopCycle, "expected/tc_unweighted4_a.txt"},
        TextCase{"unweighted4.trn", Rule::kUncoveredSet, "expected/uc_unweighted4_a.txt"},
        TextCase{"unweighted4.trn", Rule::kCopeland, "expected/cop_unweighted4_a.txt"},
        TextCase{"cyclic5.trn", Rule::kBorda, "expected/borda_cyclic5_a.txt"},
        TextCase{"cyclic5.trn", Rule::kMaximin, "expected/mm_cyclic5_a.txt"}));

TEST(Explain, WeightedUncoveredSetText) {
  EXPECT_EQ(explain("cyclic5.trn", Rule::kWeightedUncoveredSet),
            "a is part of the weighted uncovered set because\n"
            "- a is not weighted covered by b because a is more strongly preferred "
            "over d than b (mu_X(a,d)=4, mu_X(d,b)=2)\n"
            "- a is not weighted covered by c because a is more strongly preferred "
            "over d than c (mu_X(a,d)=4, mu_X(d,c)=2)\n"
            "- a is not weighted covered by d because a is preferred in strict "
            "majority over d (mu_X(a,d)=4)\n");
}

TEST(Explain, OutTreeShape) {
  const Certificate cert =
      extract_structure(Support{load_partial("uc_tree_support.trn"), Rule::kUncoveredSet, 0});
  const auto& tree = std::get<OutTreeCertificate>(cert);
  EXPECT_EQ(tree.root, 0);
  ASSERT_EQ(tree.edges.size(), 3u);
  EXPECT_EQ(tree.edges[0], (TreeEdge{0, 1, 1}));
  EXPECT_EQ(tree.edges[1], (TreeEdge{1, 2, 1}));
  EXPECT_EQ(tree.edges[2], (TreeEdge{0, 3, 1}));
  EXPECT_EQ(tree.depth_of(2), 2);
  EXPECT_EQ(tree.children_of(0).size(), 2u);
  EXPECT_TRUE(tree.relays.empty());
}

TEST(Explain, NeighborhoodShape) {
  const SmsResult r = compute_sms(Rule::kBorda, load("cyclic5.trn"), 0);
  const Certificate any = extract_structure(r);
  const auto& cert = std::get<NeighborhoodCertificate>(any);
  EXPECT_EQ(cert.winner_row,
            (std::vector<Entry>{{1, 3}, {2, 2}, {3, 4}}));
  ASSERT_EQ(cert.loss_rows.size(), 3u);
  EXPECT_EQ(cert.loss_rows[2].opponent, 3);
  EXPECT_EQ(cert.loss_rows[2].beaters, (std::vector<Entry>{{0, 4}, {1, 2}}));
}

TEST(Explain, RejectsSupportOfWrongShape) {
  const PartialTournament two_parents = parse_tournament(
      "voters 1\ncandidates a b c\na b 1\na c 1\nb c 0\n");
  PartialTournament cycle(default_candidates(3), 1);
  cycle.set_weight(1, 2, 1);
  cycle.set_weight(2, 1, 0);
  EXPECT_THROW(extract_structure(Support{cycle, Rule::kTopCycle, 0}), InvalidArgument);
  EXPECT_NO_THROW(extract_structure(Support{two_parents, Rule::kTopCycle, 0}));
}

// Every "N=expr" claim in a rendered explanation must hold arithmetically,
// and every mu_X(x,y)=v must match the support.
void check_arithmetic(const std::string& text, const PartialTournament& x) {
  const std::regex sum(R"((\d+)=(\d+(?:\+\d+)+))");
  for (std::sregex_iterator it(text.begin(), text.end(), sum), end; it != end; ++it) {
    long total = 0;
    std::stringstream terms((*it)[2].str());
    for (std::string t; std::getline(terms, t, '+');) total += std::stol(t);
    EXPECT_EQ(std::stol((*it)[1].str()), total) << it->str();
  }
  const std::regex diff(R"((\d+)=(\d+)-(\d+))");
  for (std::sregex_iterator it(text.begin(), text.end(), diff), end; it != end; ++it) {
    EXPECT_EQ(std::stol((*it)[1].str()),
              std::stol((*it)[2].str()) - std::stol((*it)[3].str()))
        << it->str();
  }
  const std::regex prod(R"((\d+)=(\d+)\*(\d+)-(\d+))");
  for (std::sregex_iterator it(text.begin(), text.end(), prod), end; it != end; ++it) {
    EXPECT_EQ(std::stol((*it)[1].str()),
              std::stol((*it)[2].str()) * std::stol((*it)[3].str()) -
                  std::stol((*it)[4].str()))
        << it->str();
  }
  const std::regex mu(R"(mu_X\((\w+),(\w+)\)=(\d+))");
  for (std::sregex_iterator it(text.begin(), text.end(), mu), end; it != end; ++it) {
    const auto& c = x.candidates();
    EXPECT_EQ(x.weight(c.index_of((*it)[1].str()), c.index_of((*it)[2].str())),
              std::stol((*it)[3].str()))
        << it->str();
  }
  const std::regex unit(R"(\((\w+),(\w+)\) in X)");
  for (std::sregex_iterator it(text.begin(), text.end(), unit), end; it != end; ++it) {
    const auto& c = x.candidates();
    EXPECT_GT(x.weight(c.index_of((*it)[1].str()), c.index_of((*it)[2].str())), 0)
        << it->str();
  }
}

TEST(Explain, ArithmeticReparses) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int m = 2 + static_cast<int>(seed % 6);
    const Weight n = seed % 2 ? 1 : 1 + static_cast<Weight>(seed % 9);
    const WeightedTournament t = random_tournament(m, n, seed);
    for (Rule rule : kAllRules) {
      if (requires_unweighted(rule) && n != 1) continue;
      for (Candidate w : winners(rule, t).winners) {
        const SmsResult r = compute_sms(rule, t, w);
        check_arithmetic(render_text(extract_structure(r)), r.support.partial);
      }
    }
  }
}

TEST(Explain, Lossless) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int m = 1 + static_cast<int>(seed % 7);
    const Weight n = seed % 3 ? 1 : 1 + static_cast<Weight>(seed % 8);
    const WeightedTournament t = random_tournament(m, n, seed);
    for (Rule rule : kAllRules) {
      if (requires_unweighted(rule) && n != 1) continue;
      for (Candidate w : winners(rule, t).winners) {
        const SmsResult r = compute_sms(rule, t, w);
        EXPECT_EQ(regenerate(extract_structure(r)), r.support.partial)
            << rule_name(rule) << "\n" << serialize(t);
      }
    }
  }
}

TEST(Explain, DotWeighted) {
  const SmsResult r = compute_sms(Rule::kWeightedUncoveredSet, load("cyclic5.trn"), 0);
  EXPECT_EQ(render_dot(extract_structure(r)),
            "digraph sms {\n"
            "  \"a\";\n  \"b\";\n  \"c\";\n  \"d\";\n"
            "  \"a\" -> \"d\" [label=\"4\"];\n"
            "  \"d\" -> \"b\" [label=\"2\"];\n"
            "  \"d\" -> \"c\" [label=\"2\"];\n"
            "}\n");
}

TEST(Explain, DotUnweightedHasNoLabels) {
  const SmsResult r = compute_sms(Rule::kTopCycle, load("unweighted4.trn"), 0);
  const std::string dot = render_dot(extract_structure(r));
  EXPECT_EQ(dot.find("label"), std::string::npos);
  EXPECT_NE(dot.find("\"b\" -> \"c\";"), std::string::npos);
}

TEST(Explain, DotRelayIsDashed) {
  const Certificate cert = extract_structure(Support{
      parse_tournament("voters 5\ncandidates a b c\na b 3\na c 2\nb c 2\n"),
      Rule::kWeightedUncoveredSet, 0});
  const auto& tree = std::get<OutTreeCertificate>(cert);
  ASSERT_EQ(tree.relays.size(), 1u);
  EXPECT_NE(render_dot(cert).find("\"a\" -> \"c\" [label=\"2\", style=dashed];"),
            std::string::npos)
      << render_dot(cert);
}

// Even n: every root edge is a tie-weight relay and the covering edges
// b -> g -> e -> b form a cycle. Each opponent is still two hops from c.
TEST(Explain, RelayedParentsMayFormCycle) {
  const PartialTournament x = parse_tournament(
      "voters 2\ncandidates a b c d e f g\nb d 2\nb g 2\nc b 1\nc e 1\n"
      "c g 1\ne a 2\ne b 2\ng e 2\ng f 2\n");
  ASSERT_TRUE(is_necessary_winner(x, 2, Rule::kWeightedUncoveredSet));
  const Certificate cert = extract_structure(Support{x, Rule::kWeightedUncoveredSet, 2});
  const auto& tree = std::get<OutTreeCertificate>(cert);
  EXPECT_EQ(tree.relays.size(), 3u);
  EXPECT_EQ(tree.depth_of(1), 2);
  EXPECT_EQ(tree.depth_of(0), 2);
  EXPECT_EQ(regenerate(cert), x);
  check_arithmetic(render_text(cert), x);
}

TEST(Explain, SingleCandidate) {
  const WeightedTournament one(PartialTournament(default_candidates(1), 1));
  for (Rule rule : kAllRules) {
    const Certificate cert = extract_structure(compute_sms(rule, one, 0));
    EXPECT_EQ(render_text(cert), "a wins trivially: no opponents\n") << rule_name(rule);
    EXPECT_EQ(regenerate(cert), PartialTournament(default_candidates(1), 1));
  }
}

}  // namespace
}  // namespace tsms
