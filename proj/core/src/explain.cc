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

#include "tsms/explain.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <string_view>

namespace tsms {
namespace {

// One wording set per rule. {units} expands to " (...)" listing the
// supporting weight units, or to nothing when there are none.
struct Wording {
  Rule rule;
  std::string_view header;
  std::string_view direct;    // path rules: one-step bullet
  std::string_view relayed;   // path rules: bullet through an intermediate
  std::string_view winner;    // score rules: w's own guarantee
  std::string_view opponent;  // score rules: an opponent's ceiling
};

constexpr std::array<Wording, 6> kWordings = {{
    {Rule::kTopCycle,
     "{w} is part of the top cycle because eliminating {w} would lead to an "
     "empty top cycle. Indeed eliminating {w} would",
     "{indent}- eliminate {c} because {p} is preferred to {c}{units}",
     "{indent}- which would eliminate {c} because {p} is preferred to {c}{units}",
     "", ""},
    {Rule::kUncoveredSet, "{w} is part of the uncovered set because",
     "- {w} is not covered by {c} since {w} is preferred to {c}{units}",
     "- {w} is not covered by {c} since {w} is preferred to {p}{units_wp} and "
     "{p} is preferred to {c}{units_pc}",
     "", ""},
    {Rule::kCopeland, "{w} is part of the Copeland winners because", "", "",
     "- {w} wins at least {score} {noun} since {w} is preferred to "
     "{targets}{units}",
     "- {c} wins at most {ceiling}={total}-{loss} head-to-heads since it loses "
     "at least {loss} {noun} to {beaters}{units}"},
    {Rule::kBorda, "{w} is part of the Borda winners because", "", "",
     "- {w} wins at least {sum} pairwise comparisons{units}",
     "- {c} wins at most {ceiling}={n}*{m1}-{loss} pairwise comparisons since "
     "it loses at least {loss_sum}{units}"},
    {Rule::kMaximin, "{w} is part of the maximin set because", "", "",
     "- {w} wins at least {floor} pairwise comparisons in each "
     "head-to-head{units}",
     "- {c} wins at most {ceiling}={n}-{v} pairwise comparisons against "
     "{p}{units}"},
    {Rule::kWeightedUncoveredSet,
     "{w} is part of the weighted uncovered set because",
     "- {w} is not weighted covered by {c} because {w} is preferred in strict "
     "majority over {c}{units}",
     "- {w} is not weighted covered by {c} because {w} is more strongly "
     "preferred over {p} than {c}{units}",
     "", ""},
}};

constexpr std::string_view kTrivial = "{w} wins trivially: no opponents";

const Wording& wording(Rule rule) {
  return *std::find_if(kWordings.begin(), kWordings.end(),
                       [rule](const Wording& w) { return w.rule == rule; });
}

template <typename... Args>
std::string line(std::string_view tpl, Args&&... args) {
  return fmt::format(fmt::runtime(tpl), std::forward<Args>(args)...) + "\n";
}

class Labels {
 public:
  explicit Labels(const CandidateSet& set) : set_(set) {}
  const std::string& operator()(Candidate c) const { return set_.label(c); }

  std::string edge(Candidate p, Candidate c) const {
    return fmt::format("({},{}) in X", set_.label(p), set_.label(c));
  }
  std::string mu(Candidate p, Candidate c, Weight v) const {
    return fmt::format("mu_X({},{})={}", set_.label(p), set_.label(c), v);
  }

 private:
  const CandidateSet& set_;
};

std::string units(const std::vector<std::string>& items) {
  if (items.empty()) return "";
  return " (" + fmt::format("{}", fmt::join(items, ", ")) + ")";
}

// "b", "b and to d", "b, to c and to d"
std::string to_list(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += i + 1 == names.size() ? " and to " : ", to ";
    out += names[i];
  }
  return out;
}

// "9=3+2+4", or just "4" for a single term.
std::string sum_expr(const std::vector<Weight>& terms) {
  Weight total = 0;
  for (Weight t : terms) total += t;
  if (terms.size() <= 1) return std::to_string(total);
  return fmt::format("{}={}", total, fmt::join(terms, "+"));
}

const TreeEdge* find_edge(const std::vector<TreeEdge>& edges, Candidate child) {
  for (const TreeEdge& e : edges) {
    if (e.child == child) return &e;
  }
  return nullptr;
}

OutTreeCertificate extract_tree(const Support& s) {
  const PartialTournament& x = s.partial;
  const Candidate root = s.winner;
  const int m = x.size();
  const Weight majority = x.voters() / 2 + 1;
  OutTreeCertificate cert{s.rule, root, x.voters(), x.candidates_ptr(), {}, {}};
  for (Candidate c = 0; c < m; ++c) {
    std::vector<Entry> in;
    for (Candidate p = 0; p < m; ++p) {
      if (x.weight(p, c) > 0) in.push_back({p, x.weight(p, c)});
    }
    if (c == root) {
      if (!in.empty()) throw InvalidArgument("support has an edge into the root");
      continue;
    }
    const auto from_root = std::find_if(in.begin(), in.end(),
                                        [&](const Entry& e) { return e.other == root; });
    if (in.size() == 1) {
      if (s.rule == Rule::kWeightedUncoveredSet && in[0].other == root &&
          in[0].weight < majority) {
        throw InvalidArgument("root edge below strict majority has no cover");
      }
      cert.edges.push_back({in[0].other, c, in[0].weight});
    } else if (s.rule == Rule::kWeightedUncoveredSet && in.size() == 2 &&
               from_root != in.end() && from_root->weight < majority) {
      const Entry& other = in[0].other == root ? in[1] : in[0];
      cert.edges.push_back({other.other, c, other.weight});
      cert.relays.push_back({root, c, from_root->weight});
    } else {
      throw InvalidArgument("candidate " + x.label(c) +
                            " does not have exactly one parent in the support");
    }
  }
  for (Candidate c = 0; c < m; ++c) {
    if (c == root) continue;
    const int depth = cert.depth_of(c);
    if (depth < 0) throw InvalidArgument("support is not connected to the root");
    if (s.rule == Rule::kUncoveredSet && depth > 2) {
      throw InvalidArgument("uncovered-set support deeper than two");
    }
  }
  return cert;
}

NeighborhoodCertificate extract_neighborhood(const Support& s) {
  const PartialTournament& x = s.partial;
  const Candidate w = s.winner;
  const int m = x.size();
  NeighborhoodCertificate cert{s.rule, w, x.voters(), x.candidates_ptr(), {}, {}};
  for (Candidate c = 0; c < m; ++c) {
    if (c == w) continue;
    if (x.weight(c, w) > 0) throw InvalidArgument("support has an edge into the winner");
    if (x.weight(w, c) > 0) cert.winner_row.push_back({c, x.weight(w, c)});
    LossRow row{c, {}};
    for (Candidate p = 0; p < m; ++p) {
      if (x.weight(p, c) > 0) row.beaters.push_back({p, x.weight(p, c)});
    }
    cert.loss_rows.push_back(std::move(row));
  }
  return cert;
}

std::string tree_text(const OutTreeCertificate& cert) {
  const Labels name(*cert.candidates);
  const Wording& wd = wording(cert.rule);
  const Candidate w = cert.root;
  std::string out = line(wd.header, fmt::arg("w", name(w)));

  if (cert.rule == Rule::kTopCycle) {
    auto visit = [&](auto&& self, Candidate parent, int depth) -> void {
      for (const TreeEdge& e : cert.children_of(parent)) {
        out += line(depth == 0 ? wd.direct : wd.relayed,
                    fmt::arg("indent", std::string(2 * depth, ' ')),
                    fmt::arg("c", name(e.child)), fmt::arg("p", name(e.parent)),
                    fmt::arg("units", units({name.edge(e.parent, e.child)})));
        self(self, e.child, depth + 1);
      }
    };
    visit(visit, w, 0);
    return out;
  }

  auto root_weight = [&](Candidate c) -> Weight {
    if (const TreeEdge* e = find_edge(cert.edges, c); e && e->parent == w) {
      return e->weight;
    }
    const TreeEdge* r = find_edge(cert.relays, c);
    return r ? r->weight : 0;
  };
  for (const TreeEdge& e : cert.edges) {
    const Candidate c = e.child;
    const Candidate p = e.parent;
    if (cert.rule == Rule::kUncoveredSet) {
      if (p == w) {
        out += line(wd.direct, fmt::arg("w", name(w)), fmt::arg("c", name(c)),
                    fmt::arg("units", units({name.edge(w, c)})));
      } else {
        out += line(wd.relayed, fmt::arg("w", name(w)), fmt::arg("c", name(c)),
                    fmt::arg("p", name(p)),
                    fmt::arg("units_wp", units({name.edge(w, p)})),
                    fmt::arg("units_pc", units({name.edge(p, c)})));
      }
    } else if (p == w) {
      out += line(wd.direct, fmt::arg("w", name(w)), fmt::arg("c", name(c)),
                  fmt::arg("units", units({name.mu(w, c, e.weight)})));
    } else {
      out += line(wd.relayed, fmt::arg("w", name(w)), fmt::arg("c", name(c)),
                  fmt::arg("p", name(p)),
                  fmt::arg("units", units({name.mu(w, p, root_weight(p)),
                                           name.mu(p, c, e.weight)})));
    }
  }
  return out;
}

std::string neighborhood_text(const NeighborhoodCertificate& cert) {
  const Labels name(*cert.candidates);
  const Wording& wd = wording(cert.rule);
  const Candidate w = cert.winner;
  const Weight n = cert.voters;
  const Weight m1 = cert.candidates->size() - 1;
  std::string out = line(wd.header, fmt::arg("w", name(w)));

  std::vector<std::string> win_units;
  std::vector<std::string> targets;
  std::vector<Weight> win_terms;
  for (const Entry& e : cert.winner_row) {
    win_units.push_back(cert.rule == Rule::kCopeland ? name.edge(w, e.other)
                                                     : name.mu(w, e.other, e.weight));
    targets.push_back(name(e.other));
    win_terms.push_back(e.weight);
  }
  Weight floor = n;
  for (const LossRow& row : cert.loss_rows) {
    Weight v = 0;
    for (const Entry& e : cert.winner_row) {
      if (e.other == row.opponent) v = e.weight;
    }
    floor = std::min(floor, v);
  }

  switch (cert.rule) {
    case Rule::kCopeland: {
      const auto score = static_cast<Weight>(cert.winner_row.size());
      out += line(wd.winner, fmt::arg("w", name(w)), fmt::arg("score", score),
                  fmt::arg("noun", score == 1 ? "head-to-head" : "head-to-heads"),
                  fmt::arg("targets", to_list(targets)),
                  fmt::arg("units", units(win_units)));
      break;
    }
    case Rule::kBorda:
      out += line(wd.winner, fmt::arg("w", name(w)),
                  fmt::arg("sum", sum_expr(win_terms)),
                  fmt::arg("units", units(win_units)));
      break;
    default:
      out += line(wd.winner, fmt::arg("w", name(w)), fmt::arg("floor", floor),
                  fmt::arg("units", units(win_units)));
      break;
  }

  for (const LossRow& row : cert.loss_rows) {
    const Candidate c = row.opponent;
    std::vector<std::string> loss_units;
    std::vector<std::string> beaters;
    std::vector<Weight> terms;
    for (const Entry& e : row.beaters) {
      loss_units.push_back(cert.rule == Rule::kCopeland ? name.edge(e.other, c)
                                                        : name.mu(e.other, c, e.weight));
      beaters.push_back(name(e.other));
      terms.push_back(e.weight);
    }
    Weight loss = 0;
    for (Weight t : terms) loss += t;
    switch (cert.rule) {
      case Rule::kCopeland: {
        const auto count = static_cast<Weight>(row.beaters.size());
        out += line(wd.opponent, fmt::arg("c", name(c)),
                    fmt::arg("ceiling", m1 - count), fmt::arg("total", m1),
                    fmt::arg("loss", count),
                    fmt::arg("noun", count == 1 ? "head-to-head" : "head-to-heads"),
                    fmt::arg("beaters", to_list(beaters)),
                    fmt::arg("units", units(loss_units)));
        break;
      }
      case Rule::kBorda:
        out += line(wd.opponent, fmt::arg("c", name(c)),
                    fmt::arg("ceiling", n * m1 - loss), fmt::arg("n", n),
                    fmt::arg("m1", m1), fmt::arg("loss", loss),
                    fmt::arg("loss_sum", sum_expr(terms)),
                    fmt::arg("units", units(loss_units)));
        break;
      default: {
        // The strongest recorded defeat caps c's maximin score.
        Entry best{w, 0};
        for (const Entry& e : row.beaters) {
          if (e.weight > best.weight) best = e;
        }
        out += line(wd.opponent, fmt::arg("c", name(c)),
                    fmt::arg("ceiling", n - best.weight), fmt::arg("n", n),
                    fmt::arg("v", best.weight), fmt::arg("p", name(best.other)),
                    fmt::arg("units", best.weight > 0
                                          ? units({name.mu(best.other, c, best.weight)})
                                          : std::string()));
        break;
      }
    }
  }
  return out;
}

std::string dot_edge(const CandidateSet& set, Candidate p, Candidate c, Weight v,
                     Weight n, bool dashed) {
  std::vector<std::string> attrs;
  if (n != 1) attrs.push_back(fmt::format("label=\"{}\"", v));
  if (dashed) attrs.emplace_back("style=dashed");
  std::string out = fmt::format("  \"{}\" -> \"{}\"", set.label(p), set.label(c));
  if (!attrs.empty()) out += fmt::format(" [{}]", fmt::join(attrs, ", "));
  return out + ";\n";
}

std::string dot_nodes(const CandidateSet& set) {
  std::string out = "digraph sms {\n";
  for (const auto& l : set.labels()) out += fmt::format("  \"{}\";\n", l);
  return out;
}

}  // namespace

std::vector<TreeEdge> OutTreeCertificate::children_of(Candidate parent) const {
  std::vector<TreeEdge> out;
  for (const TreeEdge& e : edges) {
    if (e.parent == parent) out.push_back(e);
  }
  return out;
}

int OutTreeCertificate::depth_of(Candidate c) const {
  int depth = 0;
  const int m = candidates->size();
  while (c != root) {
    if (depth > 0 && find_edge(relays, c)) return depth + 1;
    const TreeEdge* e = find_edge(edges, c);
    if (!e || ++depth > m) return -1;
    c = e->parent;
  }
  return depth;
}

Certificate extract_structure(const Support& support) {
  if (is_path_rule(support.rule)) return extract_tree(support);
  return extract_neighborhood(support);
}

PartialTournament regenerate(const Certificate& cert) {
  if (const auto* tree = std::get_if<OutTreeCertificate>(&cert)) {
    PartialTournament x(tree->candidates, tree->voters);
    for (const TreeEdge& e : tree->edges) x.set_weight(e.parent, e.child, e.weight);
    for (const TreeEdge& e : tree->relays) x.set_weight(e.parent, e.child, e.weight);
    return x;
  }
  const auto& nb = std::get<NeighborhoodCertificate>(cert);
  PartialTournament x(nb.candidates, nb.voters);
  for (const Entry& e : nb.winner_row) x.set_weight(nb.winner, e.other, e.weight);
  for (const LossRow& row : nb.loss_rows) {
    for (const Entry& e : row.beaters) {
      if (e.other != nb.winner) x.set_weight(e.other, row.opponent, e.weight);
    }
  }
  return x;
}

std::string render_text(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        const CandidateSet& set = *c.candidates;
        if (set.size() == 1) {
          if constexpr (std::is_same_v<T, OutTreeCertificate>) {
            return line(kTrivial, fmt::arg("w", set.label(c.root)));
          } else {
            return line(kTrivial, fmt::arg("w", set.label(c.winner)));
          }
        }
        if constexpr (std::is_same_v<T, OutTreeCertificate>) {
          return tree_text(c);
        } else {
          return neighborhood_text(c);
        }
      },
      cert);
}

std::string render_dot(const Certificate& cert) {
  if (const auto* tree = std::get_if<OutTreeCertificate>(&cert)) {
    const CandidateSet& set = *tree->candidates;
    std::vector<std::pair<TreeEdge, bool>> all;
    for (const TreeEdge& e : tree->edges) all.push_back({e, false});
    for (const TreeEdge& e : tree->relays) all.push_back({e, true});
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return std::pair(a.first.parent, a.first.child) <
             std::pair(b.first.parent, b.first.child);
    });
    std::string out = dot_nodes(set);
    for (const auto& [e, relay] : all) {
      out += dot_edge(set, e.parent, e.child, e.weight, tree->voters, relay);
    }
    return out + "}\n";
  }
  const auto& nb = std::get<NeighborhoodCertificate>(cert);
  const CandidateSet& set = *nb.candidates;
  std::string out = dot_nodes(set);
  for (const Entry& e : nb.winner_row) {
    out += dot_edge(set, nb.winner, e.other, e.weight, nb.voters, false);
  }
  for (const LossRow& row : nb.loss_rows) {
    for (const Entry& e : row.beaters) {
      if (e.other != nb.winner) {
        out += dot_edge(set, e.other, row.opponent, e.weight, nb.voters, false);
      }
    }
  }
  return out + "}\n";
}

}  // namespace tsms
