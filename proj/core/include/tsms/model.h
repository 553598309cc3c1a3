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

#ifndef TSMS_MODEL_H_
#define TSMS_MODEL_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsms/errors.h"

namespace tsms {

// Candidates are addressed by their position in the CandidateSet. The order
// of the set is the canonical tie-breaking order for every algorithm.
using Candidate = int;
using Weight = std::int64_t;

inline constexpr Weight kMaxVoters = 2147483647;  // 2^31 - 1

class CandidateSet {
 public:
  explicit CandidateSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Candidate c) const { return labels_.at(c); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of `label`, or nullopt if it is not a candidate.
  std::optional<Candidate> find(std::string_view label) const;
  Candidate index_of(std::string_view label) const;

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Candidate> index_;
};

// Default labels a, b, ..., z, c26, c27, ...
CandidateSet default_candidates(int m);

// A partial n-weighted tournament: mu(x,y) counts the voters known to prefer
// x to y. Invariants: mu(x,x) = 0 and mu(x,y) + mu(y,x) <= n.
class PartialTournament {
 public:
  // Empty (all-zero) partial tournament.
  PartialTournament(std::shared_ptr<const CandidateSet> candidates,
                    Weight voters);
  PartialTournament(CandidateSet candidates, Weight voters);

  int size() const { return m_; }
  Weight voters() const { return n_; }
  const CandidateSet& candidates() const { return *candidates_; }
  const std::shared_ptr<const CandidateSet>& candidates_ptr() const {
    return candidates_;
  }
  const std::string& label(Candidate c) const { return candidates_->label(c); }

  Weight weight(Candidate x, Candidate y) const {
    return mu_[static_cast<std::size_t>(x) * m_ + y];
  }
  // Unassigned mass of the unordered pair {x,y}.
  Weight slack(Candidate x, Candidate y) const {
    return n_ - weight(x, y) - weight(y, x);
  }

  // Throws InvalidArgument if the new weight would break an invariant.
  void set_weight(Candidate x, Candidate y, Weight w);
  void add_weight(Candidate x, Candidate y, Weight delta) {
    set_weight(x, y, weight(x, y) + delta);
  }

  // Sum of mu(c, x) over x, and of mu(x, c) over x.
  Weight out_weight(Candidate c) const;
  Weight in_weight(Candidate c) const;

  bool same_shape(const PartialTournament& other) const {
    return n_ == other.n_ && *candidates_ == *other.candidates_;
  }

  friend bool operator==(const PartialTournament& a,
                         const PartialTournament& b) {
    return a.same_shape(b) && a.mu_ == b.mu_;
  }

 private:
  std::shared_ptr<const CandidateSet> candidates_;
  int m_;
  Weight n_;
  std::vector<Weight> mu_;
};

// A complete n-weighted tournament: every pair's weights sum to n.
class WeightedTournament {
 public:
  // Throws IncompleteTournament if `partial` is not complete.
  explicit WeightedTournament(PartialTournament partial);

  const PartialTournament& partial() const { return partial_; }
  operator const PartialTournament&() const { return partial_; }  // NOLINT

  int size() const { return partial_.size(); }
  Weight voters() const { return partial_.voters(); }
  const CandidateSet& candidates() const { return partial_.candidates(); }
  const std::string& label(Candidate c) const { return partial_.label(c); }
  Weight weight(Candidate x, Candidate y) const {
    return partial_.weight(x, y);
  }
  // For n = 1: x beats y.
  bool beats(Candidate x, Candidate y) const {
    return 2 * partial_.weight(x, y) > partial_.voters();
  }

  friend bool operator==(const WeightedTournament& a,
                         const WeightedTournament& b) {
    return a.partial_ == b.partial_;
  }

 private:
  PartialTournament partial_;
};

bool is_complete(const PartialTournament& g);

// True iff h dominates g on every ordered pair (g is a sub-tournament of h).
// Throws InvalidArgument on mismatched candidates or voter counts.
bool extends(const PartialTournament& g, const PartialTournament& h);

// l1 size: the sum of all weights.
Weight support_size(const PartialTournament& g);

inline constexpr std::uint64_t kDefaultCompletionGuard = 10'000'000;

// Number of completions, saturating at UINT64_MAX.
std::uint64_t completion_count(const PartialTournament& g);

// Calls `visit` on every completion of `g` in canonical order (unordered
// pairs by (x,y), x<y, and for each pair mu(x,y) ascending). Stops early if
// `visit` returns false. Throws GuardExceeded if the count exceeds `guard`.
void for_each_completion(
    const PartialTournament& g,
    const std::function<bool(const WeightedTournament&)>& visit,
    std::uint64_t guard = kDefaultCompletionGuard);

std::vector<WeightedTournament> enumerate_completions(
    const PartialTournament& g, std::uint64_t guard = kDefaultCompletionGuard);

}  // namespace tsms

#endif  // TSMS_MODEL_H_
