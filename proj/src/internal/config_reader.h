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

#ifndef FEDBCO_INTERNAL_CONFIG_READER_H_
#define FEDBCO_INTERNAL_CONFIG_READER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

#include "fedbco/simulator.h"

namespace fedbco {
namespace internal {

// Typed access to an INI tree with line-aware diagnostics. Tracks which
// keys were read so leftovers can be rejected as unknown.
class ConfigReader {
 public:
  explicit ConfigReader(const std::string& text);

  bool Has(const std::string& path) const;
  bool IsSection(const std::string& key) const;
  int LineOf(const std::string& path) const;

  std::string Raw(const std::string& path) const;
  std::optional<std::string> Optional(const std::string& path) const;
  long long Integer(const std::string& path) const;
  double Real(const std::string& path) const;
  bool Boolean(const std::string& path) const;
  // Comma-separated list.
  std::vector<std::string> List(const std::string& path) const;

  long long ParseInteger(const std::string& v, const std::string& path) const;
  std::uint64_t ParseUnsigned(const std::string& v,
                              const std::string& path) const;
  double ParseReal(const std::string& v, const std::string& path) const;

  // Throws ParseError for any key not read so far and not in `extra`.
  void RejectUnused(const std::set<std::string>& extra = {}) const;

 private:
  boost::property_tree::ptree tree_;
  std::map<std::string, int> lines_;
  mutable std::set<std::string> used_;
};

RunConfig ReadRunConfig(const ConfigReader& reader);
std::string ReadFile(const std::string& path);

}  // namespace internal
}  // namespace fedbco

#endif  // FEDBCO_INTERNAL_CONFIG_READER_H_
