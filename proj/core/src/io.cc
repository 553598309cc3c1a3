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

#include "tsms/io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace tsms {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<Weight> parse_int(std::string_view s) {
  Weight v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct PairLine {
  int line;
  std::string from, to;
  Weight weight;
};

}  // namespace

PartialTournament parse_tournament(std::istream& in) {
  std::optional<Weight> voters;
  std::optional<std::vector<std::string>> labels;
  std::vector<PairLine> pairs;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "voters") {
      if (tokens.size() != 2) {
        throw ParseError(lineno, "expected 'voters <n>'");
      }
      if (voters) throw ParseError(lineno, "duplicate 'voters' line");
      if (!pairs.empty()) {
        throw ParseError(lineno, "'voters' must precede pair lines");
      }
      auto n = parse_int(tokens[1]);
      if (!n || *n < 1 || *n > kMaxVoters) {
        throw ParseError(lineno, "voter count must be an integer in [1, 2^31-1]");
      }
      voters = *n;
      continue;
    }
    if (tokens.front() == "candidates") {
      if (labels) throw ParseError(lineno, "duplicate 'candidates' line");
      if (tokens.size() < 2) {
        throw ParseError(lineno, "'candidates' needs at least one label");
      }
      std::vector<std::string> ls;
      std::set<std::string_view> seen;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!seen.insert(tokens[i]).second) {
          throw ParseError(lineno, "duplicate candidate label '" +
                                       std::string(tokens[i]) + "'");
        }
        ls.emplace_back(tokens[i]);
      }
      labels = std::move(ls);
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(lineno, "malformed line: expected '<from> <to> <weight>'");
    }
    auto w = parse_int(tokens[2]);
    if (!w) {
      throw ParseError(lineno, "weight '" + std::string(tokens[2]) +
                                   "' is not an integer");
    }
    pairs.push_back({lineno, std::string(tokens[0]), std::string(tokens[1]), *w});
  }

  if (!labels) throw ParseError(0, "missing 'candidates' line");
  PartialTournament g(CandidateSet(std::move(*labels)), voters.value_or(1));
  const Weight n = g.voters();
  std::set<std::pair<Candidate, Candidate>> seen_pairs;
  for (const PairLine& p : pairs) {
    auto x = g.candidates().find(p.from);
    auto y = g.candidates().find(p.to);
    if (!x) throw ParseError(p.line, "unknown candidate '" + p.from + "'");
    if (!y) throw ParseError(p.line, "unknown candidate '" + p.to + "'");
    if (*x == *y) throw ParseError(p.line, "self-pair '" + p.from + "'");
    if (!seen_pairs.insert({*x, *y}).second) {
      throw ParseError(p.line, "duplicate pair " + p.from + " " + p.to);
    }
    if (p.weight < 0 || p.weight > n) {
      throw ParseError(p.line, "weight " + std::to_string(p.weight) +
                                   " outside [0, " + std::to_string(n) + "]");
    }
    if (p.weight + g.weight(*y, *x) > n) {
      throw ParseError(p.line, "mu(" + p.from + "," + p.to + ") + mu(" +
                                   p.to + "," + p.from + ") = " +
                                   std::to_string(p.weight + g.weight(*y, *x)) +
                                   " exceeds n=" + std::to_string(n));
    }
    g.set_weight(*x, *y, p.weight);
  }
  return g;
}

PartialTournament parse_tournament(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tournament(in);
}

PartialTournament read_tournament_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_tournament(in);
}

std::string serialize(const PartialTournament& g) {
  std::string out = "voters " + std::to_string(g.voters()) + "\ncandidates";
  for (const auto& l : g.candidates().labels()) {
    out += ' ';
    out += l;
  }
  out += '\n';
  const int m = g.size();
  for (Candidate x = 0; x < m; ++x) {
    for (Candidate y = 0; y < m; ++y) {
      const Weight w = g.weight(x, y);
      if (w == 0) continue;
      out += g.label(x);
      out += ' ';
      out += g.label(y);
      out += ' ';
      out += std::to_string(w);
      out += '\n';
    }
  }
  return out;
}

}  // namespace tsms
