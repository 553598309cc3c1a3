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

// Certificates extracted from supports, and their text and Graphviz
// renderings.

#ifndef TSMS_EXPLAIN_H_
#define TSMS_EXPLAIN_H_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tsms/model.h"
#include "tsms/rules.h"
#include "tsms/sms.h"

namespace tsms {

struct TreeEdge {
  Candidate parent;
  Candidate child;
  Weight weight;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Path rules. Every non-root candidate is the child of exactly one tree edge.
// For the weighted uncovered set, w may also keep a sub-majority weight on an
// opponent that is itself reached through another candidate; those root
// edges are listed separately as relays. A relay gives its opponent a
// direct hop from the root, so weighted certificates may have tree edges
// that form a cycle among relayed opponents.
struct OutTreeCertificate {
  Rule rule;
  Candidate root;
  Weight voters;
  std::shared_ptr<const CandidateSet> candidates;
  std::vector<TreeEdge> edges;   // sorted by child
  std::vector<TreeEdge> relays;  // root edges, sorted by child

  std::vector<TreeEdge> children_of(Candidate parent) const;
  // Hops from the root, taking a relay as one hop; -1 when unreachable.
  int depth_of(Candidate c) const;
};

struct Entry {
  Candidate other;
  Weight weight;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct LossRow {
  Candidate opponent;
  std::vector<Entry> beaters;  // every recorded defeat, w included
};

// Score rules: w's recorded wins and, per opponent, its recorded defeats.
// w's edges show up in both; the support mass is the winner row plus the
// loss entries whose beater is not w.
struct NeighborhoodCertificate {
  Rule rule;
  Candidate winner;
  Weight voters;
  std::shared_ptr<const CandidateSet> candidates;
  std::vector<Entry> winner_row;
  std::vector<LossRow> loss_rows;  // one per opponent, canonical order
};

using Certificate = std::variant<OutTreeCertificate, NeighborhoodCertificate>;

// Throws InvalidArgument when the support's shape does not fit its rule.
Certificate extract_structure(const Support& support);
inline Certificate extract_structure(const SmsResult& r) {
  return extract_structure(r.support);
}

PartialTournament regenerate(const Certificate& cert);

std::string render_text(const Certificate& cert);
std::string render_dot(const Certificate& cert);

}  // namespace tsms

#endif  // TSMS_EXPLAIN_H_
