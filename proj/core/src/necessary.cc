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

#include "tsms/necessary.h"

#include <algorithm>
#include <string>

#include "tsms/solutions.h"

namespace tsms {
namespace {

void check_voters(const PartialTournament& g, Rule rule) {
  if (requires_unweighted(rule) && g.voters() != 1) {
    throw InvalidArgument(std::string(rule_name(rule)) +
                          " needs an unweighted tournament (n=1)");
  }
}

void check_candidate(const PartialTournament& g, Candidate c) {
  if (c < 0 || c >= g.size()) {
    throw InvalidArgument("candidate index out of range");
  }
}

// Candidates reachable from w through present edges in at most `max_steps`
// steps (any number when max_steps < 0).
int reach_count(const PartialTournament& g, Candidate w, int max_steps) {
  const int m = g.size();
  std::vector<int> dist(m, -1);
  std::vector<Candidate> frontier{w};
  dist[w] = 0;
  int count = 1;
  for (int depth = 1; !frontier.empty(); ++depth) {
    if (max_steps >= 0 && depth > max_steps) break;
    std::vector<Candidate> next;
    for (Candidate x : frontier) {
      for (Candidate y = 0; y < m; ++y) {
        if (dist[y] < 0 && g.weight(x, y) > 0) {
          dist[y] = depth;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

bool score_rule_nw(const PartialTournament& g, Candidate w, Rule rule) {
  for (const ScoreMargin& margin : score_margins(g, w, rule)) {
    if (margin.delta < 0) return false;
  }
  return true;
}

// Worst case for w gives every unresolved unit around w to its opponent; best
// case for c gives every unresolved unit around c to c. Both assignments agree
// on the pair {w,c} and touch disjoint pairs otherwise, so they are realized
// by a single completion.
bool maximin_nw(const PartialTournament& g, Candidate w) {
  const int m = g.size();
  const Weight n = g.voters();
  Weight w_floor = n;
  for (Candidate x = 0; x < m; ++x) {
    if (x != w) w_floor = std::min(w_floor, g.weight(w, x));
  }
  for (Candidate c = 0; c < m; ++c) {
    if (c == w) continue;
    Weight strongest = 0;
    for (Candidate x = 0; x < m; ++x) {
      if (x != c) strongest = std::max(strongest, g.weight(x, c));
    }
    if (w_floor < n - strongest) return false;
  }
  return true;
}

bool wuc_nw(const PartialTournament& g, Candidate w) {
  const int m = g.size();
  const Weight n = g.voters();
  const Weight direct = n / 2 + 1;
  for (Candidate c = 0; c < m; ++c) {
    if (c == w || g.weight(w, c) >= direct) continue;
    bool relayed = false;
    for (Candidate mid = 0; mid < m && !relayed; ++mid) {
      if (mid == w || mid == c) continue;
      relayed = g.weight(w, mid) + g.weight(mid, c) >= n + 1;
    }
    if (!relayed) return false;
  }
  return true;
}

}  // namespace

ScoreBounds score_bounds(const PartialTournament& g, Candidate c, Rule rule) {
  if (rule != Rule::kBorda && rule != Rule::kCopeland) {
    throw InvalidArgument("score bounds are defined for borda and cop only");
  }
  check_voters(g, rule);
  check_candidate(g, c);
  const Weight total = g.voters() * (g.size() - 1);
  return {c, g.out_weight(c), total - g.in_weight(c)};
}

std::vector<ScoreMargin> score_margins(const PartialTournament& g, Candidate w,
                                       Rule rule) {
  const Weight floor = score_bounds(g, w, rule).min_score;
  std::vector<ScoreMargin> out;
  for (Candidate c = 0; c < g.size(); ++c) {
    if (c == w) continue;
    out.push_back({w, c, floor - score_bounds(g, c, rule).max_score});
  }
  return out;
}

bool is_necessary_winner(const PartialTournament& g, Candidate w, Rule rule) {
  check_voters(g, rule);
  check_candidate(g, w);
  switch (rule) {
    case Rule::kTopCycle: return reach_count(g, w, -1) == g.size();
    case Rule::kUncoveredSet: return reach_count(g, w, 2) == g.size();
    case Rule::kCopeland:
    case Rule::kBorda: return score_rule_nw(g, w, rule);
    case Rule::kMaximin: return maximin_nw(g, w);
    case Rule::kWeightedUncoveredSet: return wuc_nw(g, w);
  }
  throw InvalidArgument("unknown rule");
}

bool is_necessary_winner_bruteforce(const PartialTournament& g, Candidate w,
                                    Rule rule, std::uint64_t guard) {
  check_voters(g, rule);
  check_candidate(g, w);
  bool all = true;
  for_each_completion(
      g,
      [&](const WeightedTournament& t) {
        all = is_winner(rule, t, w);
        return all;
      },
      guard);
  return all;
}

}  // namespace tsms
