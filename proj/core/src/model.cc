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

#include "tsms/model.h"

#include <limits>
#include <numeric>
#include <utility>

namespace tsms {

CandidateSet::CandidateSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvalidArgument("candidate set must not be empty");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw InvalidArgument("candidate labels must be non-empty");
    }
    auto [it, inserted] =
        index_.emplace(labels_[i], static_cast<Candidate>(i));
    if (!inserted) {
      throw InvalidArgument("duplicate candidate label '" + labels_[i] + "'");
    }
  }
}

std::optional<Candidate> CandidateSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Candidate CandidateSet::index_of(std::string_view label) const {
  auto c = find(label);
  if (!c) throw InvalidArgument("unknown candidate '" + std::string(label) + "'");
  return *c;
}

CandidateSet default_candidates(int m) {
  if (m < 1) throw InvalidArgument("need at least one candidate");
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (i < 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("c" + std::to_string(i));
    }
  }
  return CandidateSet(std::move(labels));
}

PartialTournament::PartialTournament(
    std::shared_ptr<const CandidateSet> candidates, Weight voters)
    : candidates_(std::move(candidates)) {
  if (!candidates_) throw InvalidArgument("null candidate set");
  if (voters < 1 || voters > kMaxVoters) {
    throw InvalidArgument("voter count must be in [1, 2^31-1]");
  }
  m_ = candidates_->size();
  n_ = voters;
  mu_.assign(static_cast<std::size_t>(m_) * m_, 0);
}

PartialTournament::PartialTournament(CandidateSet candidates, Weight voters)
    : PartialTournament(
          std::make_shared<const CandidateSet>(std::move(candidates)),
          voters) {}

void PartialTournament::set_weight(Candidate x, Candidate y, Weight w) {
  if (x < 0 || y < 0 || x >= m_ || y >= m_) {
    throw InvalidArgument("candidate index out of range");
  }
  if (x == y) {
    if (w != 0) throw InvalidArgument("mu(x,x) must be 0");
    return;
  }
  if (w < 0 || w > n_) {
    throw InvalidArgument("weight " + std::to_string(w) + " outside [0, " +
                          std::to_string(n_) + "]");
  }
  if (w + weight(y, x) > n_) {
    throw InvalidArgument("mu(" + label(x) + "," + label(y) + ") + mu(" +
                          label(y) + "," + label(x) + ") would exceed n=" +
                          std::to_string(n_));
  }
  mu_[static_cast<std::size_t>(x) * m_ + y] = w;
}

Weight PartialTournament::out_weight(Candidate c) const {
  const Weight* row = &mu_[static_cast<std::size_t>(c) * m_];
  return std::accumulate(row, row + m_, Weight{0});
}

Weight PartialTournament::in_weight(Candidate c) const {
  Weight s = 0;
  for (Candidate x = 0; x < m_; ++x) s += weight(x, c);
  return s;
}

WeightedTournament::WeightedTournament(PartialTournament partial)
    : partial_(std::move(partial)) {
  if (!is_complete(partial_)) {
    throw IncompleteTournament("tournament is not complete");
  }
}

bool is_complete(const PartialTournament& g) {
  const int m = g.size();
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) {
      if (g.slack(x, y) != 0) return false;
    }
  }
  return true;
}

bool extends(const PartialTournament& g, const PartialTournament& h) {
  if (!g.same_shape(h)) {
    throw InvalidArgument(
        "extends: tournaments differ in candidates or voter count");
  }
  const int m = g.size();
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = 0; y < m; ++y) {
      if (g.weight(x, y) > h.weight(x, y)) return false;
    }
  }
  return true;
}

Weight support_size(const PartialTournament& g) {
  Weight total = 0;
  for (Candidate c = 0; c < g.size(); ++c) total += g.out_weight(c);
  return total;
}

std::uint64_t completion_count(const PartialTournament& g) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  const int m = g.size();
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) {
      const auto options = static_cast<std::uint64_t>(g.slack(x, y)) + 1;
      if (count > kMax / options) return kMax;
      count *= options;
    }
  }
  return count;
}

void for_each_completion(
    const PartialTournament& g,
    const std::function<bool(const WeightedTournament&)>& visit,
    std::uint64_t guard) {
  const std::uint64_t count = completion_count(g);
  if (count > guard) {
    throw GuardExceeded("completion count " + std::to_string(count) +
                        " exceeds guard " + std::to_string(guard) +
                        "; use the rule-specific necessary-winner check");
  }
  struct FreePair {
    Candidate x, y;
    Weight base_x, base_y, slack;
  };
  std::vector<FreePair> free_pairs;
  const int m = g.size();
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) {
      if (g.slack(x, y) > 0) {
        free_pairs.push_back(
            {x, y, g.weight(x, y), g.weight(y, x), g.slack(x, y)});
      }
    }
  }
  // Odometer over the extra weight given to x in each free pair; the first
  // pair varies slowest.
  std::vector<Weight> extra(free_pairs.size(), 0);
  PartialTournament current = g;
  auto apply = [&](std::size_t i) {
    const FreePair& p = free_pairs[i];
    current.set_weight(p.y, p.x, 0);
    current.set_weight(p.x, p.y, p.base_x + extra[i]);
    current.set_weight(p.y, p.x, p.base_y + p.slack - extra[i]);
  };
  for (std::size_t i = 0; i < free_pairs.size(); ++i) apply(i);
  while (true) {
    if (!visit(WeightedTournament(current))) return;
    std::size_t i = free_pairs.size();
    while (i > 0) {
      --i;
      if (extra[i] < free_pairs[i].slack) {
        ++extra[i];
        apply(i);
        break;
      }
      extra[i] = 0;
      apply(i);
      if (i == 0) return;
    }
    if (free_pairs.empty()) return;
  }
}

std::vector<WeightedTournament> enumerate_completions(
    const PartialTournament& g, std::uint64_t guard) {
  std::vector<WeightedTournament> out;
  for_each_completion(
      g,
      [&](const WeightedTournament& t) {
        out.push_back(t);
        return true;
      },
      guard);
  return out;
}

}  // namespace tsms
