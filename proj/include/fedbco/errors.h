// Copyright 2026 The fedbco Authors.
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

#ifndef FEDBCO_ERRORS_H_
#define FEDBCO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fedbco {

// Malformed or incomplete configuration text (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed configuration that violates a model invariant, e.g. an
// algorithm paired with the wrong oracle or zeta > 2G (CLI exit code 3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A run produced a non-finite iterate (CLI exit code 3).
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long round)
      : std::runtime_error(what), round_(round) {}
  long round() const { return round_; }

 private:
  long round_;
};

}  // namespace fedbco

#endif  // FEDBCO_ERRORS_H_
