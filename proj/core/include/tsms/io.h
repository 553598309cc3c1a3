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

// Line-based tournament file format:
//
//   # comment
//   voters <n>                      optional, default 1, before any pair line
//   candidates <l1> <l2> ... <lm>   exactly once; fixes the canonical order
//   <li> <lj> <w>                   mu(li,lj) = w, one line per ordered pair
//
// Blank lines are ignored. Absent pairs have weight 0. serialize() emits
// `voters`, `candidates`, then the nonzero pairs sorted by (source, target)
// index; that byte layout is the interchange format.

#ifndef TSMS_IO_H_
#define TSMS_IO_H_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "tsms/model.h"

namespace tsms {

// Throws ParseError (with the offending line number) on malformed input.
PartialTournament parse_tournament(std::istream& in);
PartialTournament parse_tournament(std::string_view text);
PartialTournament read_tournament_file(const std::filesystem::path& path);

std::string serialize(const PartialTournament& g);

}  // namespace tsms

#endif  // TSMS_IO_H_
