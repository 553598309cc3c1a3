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

#ifndef TSMS_TESTS_FIXTURES_H_
#define TSMS_TESTS_FIXTURES_H_

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "tsms/io.h"
#include "tsms/model.h"

namespace tsms::fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(TSMS_DATA_DIR) + "/" + name;
}

inline PartialTournament load_partial(const std::string& name) {
  return read_tournament_file(data_path(name));
}

inline WeightedTournament load(const std::string& name) {
  return WeightedTournament(load_partial(name));
}

// Row-major weights; candidates a, b, c, ...
inline PartialTournament from_matrix(const std::vector<std::vector<Weight>>& mu,
                                     Weight n) {
  PartialTournament g(default_candidates(static_cast<int>(mu.size())), n);
  for (Candidate x = 0; x < g.size(); ++x) {
    for (Candidate y = 0; y < g.size(); ++y) {
      if (x != y && mu[x][y] > 0) g.set_weight(x, y, mu[x][y]);
    }
  }
  return g;
}

inline PartialTournament from_edges(
    int m, Weight n,
    const std::vector<std::tuple<Candidate, Candidate, Weight>>& edges) {
  PartialTournament g(default_candidates(m), n);
  for (const auto& [x, y, w] : edges) g.set_weight(x, y, w);
  return g;
}

// All 2^(m(m-1)/2) labeled unweighted tournaments on m candidates, in
// bitmask order over the pairs (x,y), x<y.
inline std::vector<WeightedTournament> all_unweighted(int m) {
  std::vector<std::pair<Candidate, Candidate>> pairs;
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = x + 1; y < m; ++y) pairs.emplace_back(x, y);
  }
  std::vector<WeightedTournament> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    PartialTournament g(default_candidates(m), 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [x, y] = pairs[i];
      if (mask >> i & 1u) {
        g.set_weight(x, y, 1);
      } else {
        g.set_weight(y, x, 1);
      }
    }
    out.emplace_back(std::move(g));
  }
  return out;
}

}  // namespace tsms::fixtures

#endif  // TSMS_TESTS_FIXTURES_H_
