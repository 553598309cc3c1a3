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

#include "tsms/solutions.h"

#include <algorithm>
#include <cstdint>
#include <string>

namespace tsms {
namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

int popcount(const Bits& b) {
  int total = 0;
  for (std::uint64_t word : b) total += __builtin_popcountll(word);
  return total;
}

WinnerSet argmax(Rule rule, const std::vector<Weight>& scores) {
  WinnerSet out{rule, {}};
  const Weight best = *std::max_element(scores.begin(), scores.end());
  for (Candidate c = 0; c < static_cast<int>(scores.size()); ++c) {
    if (scores[c] == best) out.winners.push_back(c);
  }
  return out;
}

// Two-step condition for c'' against c: some intermediate c' with
// mu(c,c') > mu(c'',c').
bool wuc_two_step(const WeightedTournament& t, Candidate c, Candidate target) {
  for (Candidate mid = 0; mid < t.size(); ++mid) {
    if (mid == c || mid == target) continue;
    if (t.weight(c, mid) > t.weight(target, mid)) return true;
  }
  return false;
}

bool wuc_member(const WeightedTournament& t, Candidate c) {
  for (Candidate other = 0; other < t.size(); ++other) {
    if (other == c) continue;
    if (t.weight(c, other) > t.weight(other, c)) continue;
    if (!wuc_two_step(t, c, other)) return false;
  }
  return true;
}

bool uc_member(const WeightedTournament& t, Candidate w) {
  const int m = t.size();
  std::vector<char> reached(m, 0);
  reached[w] = 1;
  for (Candidate x = 0; x < m; ++x) {
    if (x == w || !t.beats(w, x)) continue;
    reached[x] = 1;
    for (Candidate y = 0; y < m; ++y) {
      if (t.beats(x, y)) reached[y] = 1;
    }
  }
  return std::all_of(reached.begin(), reached.end(),
                     [](char r) { return r != 0; });
}

bool tc_member(const WeightedTournament& t, Candidate w) {
  const int m = t.size();
  std::vector<char> seen(m, 0);
  std::vector<Candidate> stack{w};
  seen[w] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Candidate x = stack.back();
    stack.pop_back();
    for (Candidate y = 0; y < m; ++y) {
      if (!seen[y] && t.beats(x, y)) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == m;
}

}  // namespace

bool WinnerSet::contains(Candidate c) const {
  return std::binary_search(winners.begin(), winners.end(), c);
}

void require_unweighted(const WeightedTournament& t, Rule rule) {
  if (t.voters() != 1) {
    throw InvalidArgument(std::string(rule_name(rule)) +
                          " is defined for unweighted tournaments only (n=1, got n=" +
                          std::to_string(t.voters()) + ")");
  }
}

WinnerSet top_cycle(const WeightedTournament& t) {
  require_unweighted(t, Rule::kTopCycle);
  // A Copeland winner always lies in the top cycle; the top cycle is then the
  // set of candidates that can reach it.
  const auto cop = copeland(t);
  const Candidate anchor = cop.winners.winners.front();
  const int m = t.size();
  std::vector<char> seen(m, 0);
  std::vector<Candidate> stack{anchor};
  seen[anchor] = 1;
  while (!stack.empty()) {
    const Candidate y = stack.back();
    stack.pop_back();
    for (Candidate x = 0; x < m; ++x) {
      if (!seen[x] && t.beats(x, y)) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
  }
  WinnerSet out{Rule::kTopCycle, {}};
  for (Candidate c = 0; c < m; ++c) {
    if (seen[c]) out.winners.push_back(c);
  }
  return out;
}

WinnerSet uncovered_set(const WeightedTournament& t) {
  require_unweighted(t, Rule::kUncoveredSet);
  const int m = t.size();
  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  std::vector<Bits> rows(m, Bits(words, 0));
  for (Candidate x = 0; x < m; ++x) {
    set_bit(rows[x], x);
    for (Candidate y = 0; y < m; ++y) {
      if (t.beats(x, y)) set_bit(rows[x], y);
    }
  }
  WinnerSet out{Rule::kUncoveredSet, {}};
  for (Candidate c = 0; c < m; ++c) {
    Bits reach = rows[c];
    for (Candidate x = 0; x < m; ++x) {
      if (x == c || !t.beats(c, x)) continue;
      for (std::size_t i = 0; i < words; ++i) reach[i] |= rows[x][i];
    }
    if (popcount(reach) == m) out.winners.push_back(c);
  }
  return out;
}

ScoredWinners copeland(const WeightedTournament& t) {
  require_unweighted(t, Rule::kCopeland);
  const int m = t.size();
  std::vector<Weight> scores(m, 0);
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = 0; y < m; ++y) {
      if (t.beats(x, y)) ++scores[x];
    }
  }
  auto winners = argmax(Rule::kCopeland, scores);
  return {{Rule::kCopeland, std::move(scores)}, std::move(winners)};
}

ScoredWinners borda(const WeightedTournament& t) {
  const int m = t.size();
  std::vector<Weight> scores(m, 0);
  for (Candidate c = 0; c < m; ++c) scores[c] = t.partial().out_weight(c);
  auto winners = argmax(Rule::kBorda, scores);
  return {{Rule::kBorda, std::move(scores)}, std::move(winners)};
}

ScoredWinners maximin(const WeightedTournament& t) {
  const int m = t.size();
  std::vector<Weight> scores(m, t.voters());
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = 0; y < m; ++y) {
      if (x != y) scores[x] = std::min(scores[x], t.weight(x, y));
    }
  }
  auto winners = argmax(Rule::kMaximin, scores);
  return {{Rule::kMaximin, std::move(scores)}, std::move(winners)};
}

WinnerSet weighted_uncovered_set(const WeightedTournament& t) {
  WinnerSet out{Rule::kWeightedUncoveredSet, {}};
  for (Candidate c = 0; c < t.size(); ++c) {
    if (wuc_member(t, c)) out.winners.push_back(c);
  }
  return out;
}

WinnerSet winners(Rule rule, const WeightedTournament& t) {
  switch (rule) {
    case Rule::kTopCycle: return top_cycle(t);
    case Rule::kUncoveredSet: return uncovered_set(t);
    case Rule::kCopeland: return copeland(t).winners;
    case Rule::kBorda: return borda(t).winners;
    case Rule::kMaximin: return maximin(t).winners;
    case Rule::kWeightedUncoveredSet: return weighted_uncovered_set(t);
  }
  throw InvalidArgument("unknown rule");
}

bool is_winner(Rule rule, const WeightedTournament& t, Candidate w) {
  if (w < 0 || w >= t.size()) throw InvalidArgument("candidate index out of range");
  switch (rule) {
    case Rule::kTopCycle:
      require_unweighted(t, rule);
      return tc_member(t, w);
    case Rule::kUncoveredSet:
      require_unweighted(t, rule);
      return uc_member(t, w);
    case Rule::kWeightedUncoveredSet:
      return wuc_member(t, w);
    default:
      return winners(rule, t).contains(w);
  }
}

}  // namespace tsms
