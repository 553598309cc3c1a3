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

#include "tsms/oracle.h"

#include <algorithm>
#include <limits>
#include <string>

#include "tsms/necessary.h"
#include "tsms/sms.h"

namespace tsms {

std::uint64_t Rng::upto(std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % range;
}

std::uint64_t sub_weighting_count(const WeightedTournament& t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (Candidate x = 0; x < t.size(); ++x) {
    for (Candidate y = 0; y < t.size(); ++y) {
      if (x == y) continue;
      const auto options = static_cast<std::uint64_t>(t.weight(x, y)) + 1;
      if (count > kMax / options) return kMax;
      count *= options;
    }
  }
  return count;
}

void for_each_minimal_support(
    const WeightedTournament& t, Candidate w, Rule rule,
    const std::function<bool(const PartialTournament&)>& visit,
    std::uint64_t guard) {
  if (w < 0 || w >= t.size()) throw InvalidArgument("candidate index out of range");
  const std::uint64_t count = sub_weighting_count(t);
  if (count > guard) {
    throw GuardExceeded("sub-weighting count " + std::to_string(count) +
                        " exceeds guard " + std::to_string(guard));
  }
  struct Slot {
    Candidate x, y;
    Weight top;
  };
  std::vector<Slot> slots;
  PartialTournament x(t.partial().candidates_ptr(), t.voters());
  for (Candidate a = 0; a < t.size(); ++a) {
    for (Candidate b = 0; b < t.size(); ++b) {
      if (a != b && t.weight(a, b) > 0) {
        slots.push_back({a, b, t.weight(a, b)});
        x.set_weight(a, b, t.weight(a, b));
      }
    }
  }
  while (true) {
    if (is_necessary_winner(x, w, rule) && is_unit_minimal(x, w, rule)) {
      if (!visit(x)) return;
    }
    std::size_t i = slots.size();
    while (true) {
      if (i == 0) return;
      --i;
      const Slot& s = slots[i];
      if (x.weight(s.x, s.y) > 0) {
        x.set_weight(s.x, s.y, x.weight(s.x, s.y) - 1);
        break;
      }
      x.set_weight(s.x, s.y, s.top);
    }
  }
}

std::vector<PartialTournament> enumerate_minimal_supports(
    const WeightedTournament& t, Candidate w, Rule rule, std::uint64_t guard) {
  std::vector<PartialTournament> out;
  for_each_minimal_support(
      t, w, rule,
      [&](const PartialTournament& x) {
        out.push_back(x);
        return true;
      },
      guard);
  return out;
}

std::vector<PartialTournament> smallest_minimal_supports(
    const WeightedTournament& t, Candidate w, Rule rule, std::uint64_t guard) {
  std::vector<PartialTournament> out;
  Weight best = std::numeric_limits<Weight>::max();
  for_each_minimal_support(
      t, w, rule,
      [&](const PartialTournament& x) {
        const Weight size = support_size(x);
        if (size < best) {
          best = size;
          out.clear();
        }
        if (size == best) out.push_back(x);
        return true;
      },
      guard);
  return out;
}

Weight oracle_sms_size(const WeightedTournament& t, Candidate w, Rule rule,
                       std::uint64_t guard) {
  Weight best = -1;
  for_each_minimal_support(
      t, w, rule,
      [&](const PartialTournament& x) {
        const Weight size = support_size(x);
        if (best < 0 || size < best) best = size;
        return true;
      },
      guard);
  if (best < 0) {
    throw NotAWinner(t.label(w) + " has no support under " +
                     std::string(rule_name(rule)));
  }
  return best;
}

WinnerSet weighted_uncovered_set_by_covering(const WeightedTournament& t) {
  const int m = t.size();
  auto covers = [&](Candidate c, Candidate x) {
    if (t.weight(c, x) < t.weight(x, c)) return false;
    for (Candidate z = 0; z < m; ++z) {
      if (z != c && z != x && t.weight(c, z) < t.weight(x, z)) return false;
    }
    return true;
  };
  WinnerSet out{Rule::kWeightedUncoveredSet, {}};
  for (Candidate x = 0; x < m; ++x) {
    bool covered = false;
    for (Candidate c = 0; c < m && !covered; ++c) {
      covered = c != x && covers(c, x);
    }
    if (!covered) out.winners.push_back(x);
  }
  return out;
}

void validate(const SetCoverInstance& inst) {
  if (inst.universe < 1) throw InvalidArgument("universe must be non-empty");
  if (inst.subsets.empty()) throw InvalidArgument("need at least one subset");
  std::vector<char> hit(inst.universe, 0);
  for (const auto& s : inst.subsets) {
    if (s.empty()) throw InvalidArgument("subsets must be non-empty");
    std::vector<char> in(inst.universe, 0);
    for (int e : s) {
      if (e < 0 || e >= inst.universe) throw InvalidArgument("element out of range");
      if (in[e]) throw InvalidArgument("element listed twice in a subset");
      in[e] = hit[e] = 1;
    }
    if (static_cast<int>(s.size()) == inst.universe) {
      throw InvalidArgument("a subset equals the universe");
    }
  }
  if (std::count(hit.begin(), hit.end(), 1) != inst.universe) {
    throw InvalidArgument("subsets do not cover the universe");
  }
}

int minimum_cover_size(const SetCoverInstance& inst) {
  validate(inst);
  const int q = static_cast<int>(inst.subsets.size());
  if (q > 25) throw GuardExceeded("brute-force cover limited to 25 subsets");
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.subsets) {
    std::uint32_t mask = 0;
    for (int e : s) mask |= 1u << e;
    masks.push_back(mask);
  }
  const std::uint32_t full = inst.universe >= 32
                                 ? ~0u
                                 : (1u << inst.universe) - 1;
  int best = q;
  for (std::uint32_t pick = 1; pick < (1u << q); ++pick) {
    const int size = __builtin_popcount(pick);
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (int i = 0; i < q; ++i) {
      if (pick >> i & 1u) covered |= masks[i];
    }
    if (covered == full) best = size;
  }
  return best;
}

SetCoverTournament build_setcover_tournament(const SetCoverInstance& inst) {
  validate(inst);
  const int p = inst.universe;
  const int q = static_cast<int>(inst.subsets.size());
  std::vector<std::string> labels{"w"};
  for (int e = 0; e < p; ++e) labels.push_back("e" + std::to_string(e + 1));
  for (int s = 0; s < q; ++s) labels.push_back("s" + std::to_string(s + 1));
  PartialTournament g(CandidateSet(std::move(labels)), 2);
  const Candidate w = 0;
  auto elem = [](int e) { return 1 + e; };
  auto set = [p](int s) { return 1 + p + s; };
  for (int e = 0; e < p; ++e) g.set_weight(elem(e), w, 2);
  for (int s = 0; s < q; ++s) g.set_weight(w, set(s), 2);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      g.set_weight(elem(a), elem(b), 1);
      g.set_weight(elem(b), elem(a), 1);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      g.set_weight(set(a), set(b), 1);
      g.set_weight(set(b), set(a), 1);
    }
  }
  for (int s = 0; s < q; ++s) {
    const auto& members = inst.subsets[s];
    for (int e = 0; e < p; ++e) {
      const bool in = std::find(members.begin(), members.end(), e) != members.end();
      g.set_weight(elem(e), set(s), in ? 1 : 2);
      g.set_weight(set(s), elem(e), in ? 1 : 0);
    }
  }
  return {WeightedTournament(std::move(g)), w};
}

WeightedTournament random_tournament(int m, Weight n, std::uint64_t seed) {
  PartialTournament g(default_candidates(m), n);
  Rng rng(seed);
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) {
      const auto v = static_cast<Weight>(rng.upto(static_cast<std::uint64_t>(n)));
      g.set_weight(x, y, v);
      g.set_weight(y, x, n - v);
    }
  }
  return WeightedTournament(std::move(g));
}

PartialTournament random_partial_tournament(int m, Weight n,
                                            std::uint64_t seed) {
  PartialTournament g(default_candidates(m), n);
  Rng rng(seed);
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) {
      const auto v = static_cast<Weight>(rng.upto(static_cast<std::uint64_t>(n)));
      const auto u =
          static_cast<Weight>(rng.upto(static_cast<std::uint64_t>(n - v)));
      g.set_weight(x, y, v);
      g.set_weight(y, x, u);
    }
  }
  return g;
}

SetCoverInstance random_setcover(int p, int q, std::uint64_t seed) {
  if (p < 2 || q < 2) throw InvalidArgument("random set cover needs p, q >= 2");
  Rng rng(seed);
  while (true) {
    SetCoverInstance inst{p, {}};
    for (int s = 0; s < q; ++s) {
      std::vector<int> members;
      for (int e = 0; e < p; ++e) {
        if (rng.coin()) members.push_back(e);
      }
      inst.subsets.push_back(std::move(members));
    }
    try {
      validate(inst);
      return inst;
    } catch (const InvalidArgument&) {
      continue;
    }
  }
}

}  // namespace tsms
