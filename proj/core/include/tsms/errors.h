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

#ifndef TSMS_ERRORS_H_
#define TSMS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tsms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed tournament text. `line()` is 1-based; 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IncompleteTournament : public Error {
 public:
  using Error::Error;
};

// The designated candidate does not win under the requested rule.
class NotAWinner : public Error {
 public:
  using Error::Error;
};

// A claimed support is not dominated by the tournament it should support.
class NotASubTournament : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tsms

#endif  // TSMS_ERRORS_H_
