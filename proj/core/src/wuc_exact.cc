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

// Exact search for smallest weighted-uncovered-set supports.
//
// A support is described by the weight x_c that w keeps against each
// opponent c. An opponent with x_c >= d = floor(n/2)+1 is won directly.
// Every other opponent needs a parent p with x_p + mu_X(p,c) >= n+1, which
// costs n+1-x_p units on the edge (p,c). For a fixed parent the total cost is
// linear in x_p, so x_p only needs the values 0, d and mu(w,p).

#include <algorithm>
#include <limits>

#include "tsms/necessary.h"
#include "tsms/sms.h"
#include "tsms/solutions.h"

namespace tsms {
namespace {

constexpr Weight kInfinite = std::numeric_limits<Weight>::max() / 4;

struct Plan {
  Weight size = kInfinite;
  int relays = 0;
  std::vector<Weight> x;          // indexed by candidate
  std::vector<Candidate> parent;  // -1 when won directly or unused
};

class WucSearch {
 public:
  WucSearch(const WeightedTournament& t, Candidate w, std::uint64_t budget)
      : t_(t), w_(w), m_(t.size()), n_(t.voters()), d_(t.voters() / 2 + 1),
        budget_(budget) {
    for (Candidate c = 0; c < m_; ++c) {
      if (c == w_) continue;
      order_.push_back(c);
    }
    std::vector<int> reach(m_, 0);
    for (Candidate p : order_) {
      for (Candidate c : order_) {
        if (c != p && t_.weight(w_, p) + t_.weight(p, c) >= n_ + 1) ++reach[p];
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Candidate a, Candidate b) { return reach[a] > reach[b]; });
    x_.assign(m_, 0);
    assigned_.assign(m_, 0);
  }

  Plan run(bool* complete, std::uint64_t* nodes) {
    for (Candidate c : order_) x_[c] = t_.weight(w_, c);
    best_ = evaluate();
    std::fill(x_.begin(), x_.end(), 0);
    exhausted_ = false;
    dfs(0, 0);
    *complete = !exhausted_;
    *nodes = nodes_;
    return best_;
  }

 private:
  std::vector<Weight> options(Candidate c) const {
    const Weight top = t_.weight(w_, c);
    std::vector<Weight> out;
    if (top >= d_) out.push_back(d_);
    if (top > 0 && top != d_) out.push_back(top);
    out.push_back(0);
    return out;
  }

  Weight x_bound(Candidate p) const {
    return assigned_[p] ? x_[p] : t_.weight(w_, p);
  }

  // Cheapest cover of c given the best-case weights of potential parents.
  Weight cover_bound(Candidate c) const {
    Weight best = kInfinite;
    for (Candidate p : order_) {
      if (p == c) continue;
      const Weight xp = x_bound(p);
      if (xp > 0 && t_.weight(p, c) >= n_ + 1 - xp) {
        best = std::min(best, n_ + 1 - xp);
      }
    }
    return best;
  }

  Weight lower_bound(Weight spent) const {
    Weight bound = spent;
    for (Candidate c : order_) {
      Weight need;
      if (assigned_[c]) {
        if (x_[c] >= d_) continue;
        need = cover_bound(c);
      } else {
        need = cover_bound(c);
        if (t_.weight(w_, c) >= d_) need = std::min(need, d_);
      }
      if (need >= kInfinite) return kInfinite;
      bound += need;
    }
    return bound;
  }

  Plan evaluate() const {
    Plan plan;
    plan.x = x_;
    plan.parent.assign(m_, -1);
    Weight size = 0;
    for (Candidate c : order_) {
      size += x_[c];
      if (x_[c] >= d_) continue;
      if (x_[c] > 0) ++plan.relays;
      Candidate chosen = -1;
      for (Candidate p = 0; p < m_; ++p) {
        if (p == w_ || p == c || x_[p] == 0) continue;
        if (t_.weight(p, c) < n_ + 1 - x_[p]) continue;
        if (chosen < 0 || x_[p] > x_[chosen]) chosen = p;
      }
      if (chosen < 0) return Plan{};
      plan.parent[c] = chosen;
      size += n_ + 1 - x_[chosen];
    }
    plan.size = size;
    return plan;
  }

  bool better(const Plan& p) const {
    return p.size < best_.size ||
           (p.size == best_.size && p.relays < best_.relays);
  }

  void dfs(std::size_t depth, Weight spent) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const Weight bound = lower_bound(spent);
    if (bound > best_.size || (bound == best_.size && best_.relays == 0)) return;
    if (depth == order_.size()) {
      Plan plan = evaluate();
      if (better(plan)) best_ = std::move(plan);
      return;
    }
    const Candidate c = order_[depth];
    assigned_[c] = 1;
    for (Weight v : options(c)) {
      x_[c] = v;
      dfs(depth + 1, spent + v);
      if (exhausted_) break;
    }
    x_[c] = 0;
    assigned_[c] = 0;
  }

  const WeightedTournament& t_;
  Candidate w_;
  int m_;
  Weight n_;
  Weight d_;
  std::uint64_t budget_;
  std::vector<Candidate> order_;
  std::vector<Weight> x_;
  std::vector<char> assigned_;
  Plan best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

void shrink_to_minimal(PartialTournament& x, Candidate w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Candidate a = 0; a < x.size(); ++a) {
      for (Candidate b = 0; b < x.size(); ++b) {
        while (x.weight(a, b) > 0) {
          x.set_weight(a, b, x.weight(a, b) - 1);
          if (is_necessary_winner(x, w, Rule::kWeightedUncoveredSet)) {
            changed = true;
            continue;
          }
          x.set_weight(a, b, x.weight(a, b) + 1);
          break;
        }
      }
    }
  }
}

}  // namespace

SmsResult sms_wuc_exact(const WeightedTournament& t, Candidate w,
                        std::uint64_t budget) {
  require_winner(Rule::kWeightedUncoveredSet, t, w);
  PartialTournament x(t.partial().candidates_ptr(), t.voters());
  bool complete = true;
  std::uint64_t nodes = 0;
  if (t.size() > 1) {
    WucSearch search(t, w, budget);
    const Plan plan = search.run(&complete, &nodes);
    for (Candidate c = 0; c < t.size(); ++c) {
      if (c == w) continue;
      if (plan.x[c] > 0) x.set_weight(w, c, plan.x[c]);
      const Candidate p = plan.parent[c];
      if (p >= 0) x.set_weight(p, c, t.voters() + 1 - plan.x[p]);
    }
    if (!complete) shrink_to_minimal(x, w);
  }
  SmsResult r{Support{std::move(x), Rule::kWeightedUncoveredSet, w}};
  r.size = support_size(r.support.partial);
  r.variant = Variant::kExact;
  r.win_count = win_count(r.support.partial, w);
  r.optimal = complete;
  r.nodes = nodes;
  return r;
}

}  // namespace tsms
