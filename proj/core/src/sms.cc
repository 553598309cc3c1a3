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

#include "tsms/sms.h"

#include <algorithm>
#include <string>

#include "tsms/necessary.h"
#include "tsms/solutions.h"

namespace tsms {
namespace {

PartialTournament empty_like(const WeightedTournament& t) {
  return PartialTournament(t.partial().candidates_ptr(), t.voters());
}

SmsResult finish(PartialTournament x, Rule rule, Candidate w, Variant v) {
  SmsResult r{Support{std::move(x), rule, w}};
  r.size = support_size(r.support.partial);
  r.variant = v;
  r.win_count = win_count(r.support.partial, w);
  return r;
}

// Breadth-first out-tree from w. Each candidate hangs below the
// lowest-index candidate of the previous level that beats it.
PartialTournament bfs_tree(const WeightedTournament& t, Candidate w) {
  const int m = t.size();
  PartialTournament x = empty_like(t);
  std::vector<char> seen(m, 0);
  seen[w] = 1;
  std::vector<Candidate> level{w};
  while (!level.empty()) {
    std::vector<Candidate> next;
    for (Candidate c = 0; c < m; ++c) {
      if (seen[c]) continue;
      for (Candidate p : level) {
        if (t.beats(p, c)) {
          x.set_weight(p, c, t.weight(p, c));
          next.push_back(c);
          break;
        }
      }
    }
    for (Candidate c : next) seen[c] = 1;
    level = std::move(next);
  }
  return x;
}

// Keeps all of w's wins, then tops up each opponent's recorded losses to
// `need` using its other defeats in canonical order.
PartialTournament fill_losses(const WeightedTournament& t, Candidate w,
                              Weight need) {
  const int m = t.size();
  PartialTournament x = empty_like(t);
  for (Candidate c = 0; c < m; ++c) {
    if (c != w) x.set_weight(w, c, t.weight(w, c));
  }
  for (Candidate c = 0; c < m; ++c) {
    if (c == w) continue;
    Weight missing = need - x.weight(w, c);
    for (Candidate p = 0; p < m && missing > 0; ++p) {
      if (p == w || p == c) continue;
      const Weight take = std::min(missing, t.weight(p, c));
      if (take > 0) {
        x.set_weight(p, c, take);
        missing -= take;
      }
    }
  }
  return x;
}

std::string winner_list(Rule rule, const WeightedTournament& t) {
  std::string out;
  for (Candidate c : winners(rule, t).winners) {
    if (!out.empty()) out += ' ';
    out += t.label(c);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kShortestPaths: return "shortest-paths";
    case Variant::kMaxwin: return "maxwin";
    case Variant::kExact: return "exact";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kShortestPaths, Variant::kMaxwin, Variant::kExact}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

Variant default_variant(Rule rule) {
  switch (rule) {
    case Rule::kTopCycle:
    case Rule::kUncoveredSet: return Variant::kShortestPaths;
    case Rule::kWeightedUncoveredSet: return Variant::kExact;
    default: return Variant::kMaxwin;
  }
}

Weight win_count(const PartialTournament& x, Candidate w) {
  return x.out_weight(w);
}

void require_winner(Rule rule, const WeightedTournament& t, Candidate w) {
  if (w < 0 || w >= t.size()) throw InvalidArgument("candidate index out of range");
  if (!is_winner(rule, t, w)) {
    throw NotAWinner(t.label(w) + " is not a " + std::string(rule_name(rule)) +
                     " winner; winners: " + winner_list(rule, t));
  }
}

SmsResult sms_tc(const WeightedTournament& t, Candidate w) {
  require_winner(Rule::kTopCycle, t, w);
  return finish(bfs_tree(t, w), Rule::kTopCycle, w, Variant::kShortestPaths);
}

SmsResult sms_uc(const WeightedTournament& t, Candidate w) {
  require_winner(Rule::kUncoveredSet, t, w);
  return finish(bfs_tree(t, w), Rule::kUncoveredSet, w,
                Variant::kShortestPaths);
}

SmsResult sms_cop(const WeightedTournament& t, Candidate w) {
  require_winner(Rule::kCopeland, t, w);
  const int m = t.size();
  const Weight score = t.partial().out_weight(w);
  PartialTournament x = score == m - 1 ? fill_losses(t, w, 0)
                                       : fill_losses(t, w, m - 1 - score);
  return finish(std::move(x), Rule::kCopeland, w, Variant::kMaxwin);
}

SmsResult sms_borda(const WeightedTournament& t, Candidate w) {
  require_winner(Rule::kBorda, t, w);
  const int m = t.size();
  if (m == 1) return finish(empty_like(t), Rule::kBorda, w, Variant::kMaxwin);
  const Weight n = t.voters();
  const Weight total = n * (m - 1);
  const Weight score = t.partial().out_weight(w);
  Weight min_out = n;
  for (Candidate c = 0; c < m; ++c) {
    if (c != w) min_out = std::min(min_out, t.weight(w, c));
  }
  const Weight floor_loss = std::min(total / m, min_out);
  const Weight target = total - floor_loss;

  if (score < target) {
    return finish(fill_losses(t, w, total - score), Rule::kBorda, w,
                  Variant::kMaxwin);
  }
  // w's wins alone certify; drop the surplus while every recorded win stays
  // at least floor_loss, which keeps each margin non-negative.
  PartialTournament x = fill_losses(t, w, 0);
  Weight surplus = score - target;
  for (Candidate c = 0; c < m && surplus > 0; ++c) {
    if (c == w) continue;
    const Weight cut = std::min(surplus, x.weight(w, c) - floor_loss);
    if (cut > 0) {
      x.set_weight(w, c, x.weight(w, c) - cut);
      surplus -= cut;
    }
  }
  return finish(std::move(x), Rule::kBorda, w, Variant::kMaxwin);
}

SmsResult sms_mm(const WeightedTournament& t, Candidate w) {
  require_winner(Rule::kMaximin, t, w);
  const int m = t.size();
  const Weight n = t.voters();
  PartialTournament x = empty_like(t);
  if (m == 1) return finish(std::move(x), Rule::kMaximin, w, Variant::kMaxwin);

  Weight score = n;
  for (Candidate c = 0; c < m; ++c) {
    if (c != w) score = std::min(score, t.weight(w, c));
  }
  const Weight floor = std::min(score, n / 2);
  const Weight cap = n - floor;
  for (Candidate c = 0; c < m; ++c) {
    if (c == w) continue;
    if (t.weight(w, c) >= cap) {
      x.set_weight(w, c, cap);
      continue;
    }
    x.set_weight(w, c, floor);
    for (Candidate p = 0; p < m; ++p) {
      if (p != w && p != c && t.weight(p, c) >= cap) {
        x.set_weight(p, c, cap);
        break;
      }
    }
  }
  return finish(std::move(x), Rule::kMaximin, w, Variant::kMaxwin);
}

SmsResult compute_sms(Rule rule, const WeightedTournament& t, Candidate w,
                      std::uint64_t wuc_budget) {
  switch (rule) {
    case Rule::kTopCycle: return sms_tc(t, w);
    case Rule::kUncoveredSet: return sms_uc(t, w);
    case Rule::kCopeland: return sms_cop(t, w);
    case Rule::kBorda: return sms_borda(t, w);
    case Rule::kMaximin: return sms_mm(t, w);
    case Rule::kWeightedUncoveredSet: return sms_wuc_exact(t, w, wuc_budget);
  }
  throw InvalidArgument("unknown rule");
}

SizeFormulaInput size_formula_input(Rule rule, const WeightedTournament& t,
                                    Candidate w) {
  if (w < 0 || w >= t.size()) throw InvalidArgument("candidate index out of range");
  SizeFormulaInput in;
  in.rule = rule;
  in.n = t.voters();
  in.m = t.size();
  in.min_out = t.size() > 1 ? t.voters() : 0;
  for (Candidate c = 0; c < t.size(); ++c) {
    if (c == w) continue;
    in.winner_row.push_back(t.weight(w, c));
    in.min_out = std::min(in.min_out, t.weight(w, c));
  }
  switch (rule) {
    case Rule::kCopeland: in.sigma_w = copeland(t).table.scores[w]; break;
    case Rule::kBorda: in.sigma_w = t.partial().out_weight(w); break;
    case Rule::kMaximin: {
      in.sigma_w = maximin(t).table.scores[w];
      const Weight cap = in.n - std::min(in.sigma_w, in.n / 2);
      for (Weight v : in.winner_row) in.k += v >= cap ? 1 : 0;
      break;
    }
    default: break;
  }
  return in;
}

SizeRange sms_size_formula(const SizeFormulaInput& in) {
  if (in.m < 1 || in.n < 1) throw InvalidArgument("need m >= 1 and n >= 1");
  if (in.rule != Rule::kMaximin && requires_unweighted(in.rule) && in.n != 1) {
    throw InvalidArgument("rule requires n = 1");
  }
  const Weight m1 = in.m - 1;
  const Weight total = in.n * m1;
  const auto exact = [](Weight v) { return SizeRange{v, v}; };
  switch (in.rule) {
    case Rule::kTopCycle:
    case Rule::kUncoveredSet: return exact(m1);
    case Rule::kCopeland:
      if (in.sigma_w < 0 || in.sigma_w > m1) {
        throw InvalidArgument("copeland score outside [0, m-1]");
      }
      return exact(in.sigma_w == m1 ? m1 : m1 * (m1 - in.sigma_w));
    case Rule::kBorda: {
      if (in.sigma_w < 0 || in.sigma_w > total) {
        throw InvalidArgument("borda score outside [0, n(m-1)]");
      }
      if (static_cast<Weight>(in.winner_row.size()) != m1) {
        throw InvalidArgument("winner_row must list m-1 weights");
      }
      Weight row_sum = 0;
      for (Weight v : in.winner_row) row_sum += v;
      if (row_sum != in.sigma_w) {
        throw InvalidArgument("winner_row does not sum to sigma_w");
      }
      if (m1 == 0) return exact(0);
      const Weight target = total - std::min(total / in.m, in.min_out);
      if (in.sigma_w >= target) return exact(target);
      Weight size = in.sigma_w;
      for (Weight v : in.winner_row) {
        size += std::max<Weight>(0, total - in.sigma_w - v);
      }
      return exact(size);
    }
    case Rule::kMaximin: {
      if (in.sigma_w < 0 || in.sigma_w > in.n) {
        throw InvalidArgument("maximin score outside [0, n]");
      }
      if (in.k < 0 || in.k > m1) throw InvalidArgument("k outside [0, m-1]");
      return exact(total - std::min(in.sigma_w, in.n / 2) * in.k);
    }
    case Rule::kWeightedUncoveredSet:
      if (in.m == 1) return exact(0);
      if (in.m == 2) return exact(in.n / 2 + 1);
      return {in.n + in.m - 2, (in.n + 1) * m1};
  }
  throw InvalidArgument("unknown rule");
}

SizeRange table_bounds(Rule rule, Weight n, int m) {
  if (m < 3) throw InvalidArgument("table bounds assume m >= 3");
  const Weight m1 = m - 1;
  switch (rule) {
    case Rule::kTopCycle:
    case Rule::kUncoveredSet: return {m1, m1};
    case Rule::kCopeland: return {m1, m1 * (m1 / 2)};
    case Rule::kBorda:
      return {(n * m1 * m1 + m - 1) / m, m1 * ((n * m1) / 2)};
    case Rule::kMaximin: return {((n + 1) / 2) * m1, n * m1};
    case Rule::kWeightedUncoveredSet: return {n + m - 2, (n + 1) * m1};
  }
  throw InvalidArgument("unknown rule");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kValidMs: return "valid-MS";
    case Verdict::kNotNecessary: return "not-necessary";
    case Verdict::kNotMinimal: return "not-minimal";
  }
  return "?";
}

bool is_unit_minimal(const PartialTournament& x, Candidate w, Rule rule) {
  PartialTournament probe = x;
  for (Candidate a = 0; a < x.size(); ++a) {
    for (Candidate b = 0; b < x.size(); ++b) {
      const Weight v = x.weight(a, b);
      if (v == 0) continue;
      probe.set_weight(a, b, v - 1);
      const bool still = is_necessary_winner(probe, w, rule);
      probe.set_weight(a, b, v);
      if (still) return false;
    }
  }
  return true;
}

Verification verify_support(const WeightedTournament& t, const Support& claim,
                            std::uint64_t guard) {
  const PartialTournament& x = claim.partial;
  if (!x.same_shape(t.partial())) {
    throw InvalidArgument("support and tournament differ in candidates or voters");
  }
  if (!extends(x, t.partial())) {
    throw NotASubTournament("support assigns more weight than the tournament");
  }
  const Candidate w = claim.winner;
  const Rule rule = claim.rule;
  if (!is_necessary_winner(x, w, rule)) {
    Verification v{Verdict::kNotNecessary, std::nullopt, std::nullopt};
    if (completion_count(x) <= guard) {
      for_each_completion(
          x,
          [&](const WeightedTournament& c) {
            if (is_winner(rule, c, w)) return true;
            v.counterexample = c;
            return false;
          },
          guard);
    }
    return v;
  }
  PartialTournament probe = x;
  for (Candidate a = 0; a < x.size(); ++a) {
    for (Candidate b = 0; b < x.size(); ++b) {
      const Weight weight = x.weight(a, b);
      if (weight == 0) continue;
      probe.set_weight(a, b, weight - 1);
      const bool still = is_necessary_winner(probe, w, rule);
      probe.set_weight(a, b, weight);
      if (still) return {Verdict::kNotMinimal, Unit{a, b}, std::nullopt};
    }
  }
  return {Verdict::kValidMs, std::nullopt, std::nullopt};
}

}  // namespace tsms
