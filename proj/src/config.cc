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

// INI configuration reader and JSON ledger records.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "json.hpp"

#include "fedbco/errors.h"
#include "fedbco/harness.h"
#include "internal/config_reader.h"

namespace fedbco {
namespace internal {

namespace pt = boost::property_tree;

ConfigReader::ConfigReader(const std::string& text) {
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree_);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), static_cast<int>(e.line()));
  }
  // property_tree drops positions, so index key lines separately.
  std::istringstream scan(text);
  std::string line;
  std::string section;
  int number = 0;
  while (std::getline(scan, line)) {
    ++number;
    std::string s = boost::algorithm::trim_copy(line);
    if (s.empty() || s[0] == ';' || s[0] == '#') continue;
    if (s.front() == '[' && s.back() == ']') {
      section = boost::algorithm::trim_copy(s.substr(1, s.size() - 2));
      lines_[section] = number;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = boost::algorithm::trim_copy(s.substr(0, eq));
    lines_[section.empty() ? key : section + "." + key] = number;
  }
}

int ConfigReader::LineOf(const std::string& path) const {
  const auto it = lines_.find(path);
  return it == lines_.end() ? 0 : it->second;
}

bool ConfigReader::Has(const std::string& path) const {
  return tree_.get_child_optional(pt::ptree::path_type(path, '.'))
      .has_value();
}

bool ConfigReader::IsSection(const std::string& key) const {
  const auto child = tree_.get_child_optional(key);
  return child && !child->empty();
}

std::string ConfigReader::Raw(const std::string& path) const {
  used_.insert(path);
  const auto v = tree_.get_optional<std::string>(path);
  if (!v) throw ParseError("missing required key '" + path + "'");
  return boost::algorithm::trim_copy(*v);
}

std::optional<std::string> ConfigReader::Optional(
    const std::string& path) const {
  if (!Has(path)) return std::nullopt;
  return Raw(path);
}

long long ConfigReader::Integer(const std::string& path) const {
  return ParseInteger(Raw(path), path);
}

double ConfigReader::Real(const std::string& path) const {
  return ParseReal(Raw(path), path);
}

bool ConfigReader::Boolean(const std::string& path) const {
  const std::string v = Raw(path);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParseError("key '" + path + "' expects a boolean, got '" + v + "'",
                   LineOf(path));
}

long long ConfigReader::ParseInteger(const std::string& v,
                                     const std::string& path) const {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("key '" + path + "' expects an integer, got '" + v + "'",
                     LineOf(path));
  }
  return out;
}

std::uint64_t ConfigReader::ParseUnsigned(const std::string& v,
                                          const std::string& path) const {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError(
        "key '" + path + "' expects a non-negative integer, got '" + v + "'",
        LineOf(path));
  }
  return out;
}

double ConfigReader::ParseReal(const std::string& v,
                               const std::string& path) const {
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(out)) {
    throw ParseError("key '" + path + "' expects a real, got '" + v + "'",
                     LineOf(path));
  }
  return out;
}

std::vector<std::string> ConfigReader::List(const std::string& path) const {
  std::vector<std::string> out;
  std::stringstream ss(Raw(path));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = boost::algorithm::trim_copy(item);
    if (item.empty()) {
      throw ParseError("empty entry in list '" + path + "'", LineOf(path));
    }
    out.push_back(item);
  }
  if (out.empty()) throw ParseError("empty list '" + path + "'", LineOf(path));
  return out;
}

void ConfigReader::RejectUnused(const std::set<std::string>& extra) const {
  for (const auto& [key, child] : tree_) {
    if (child.empty()) {
      if (!used_.count(key) && !extra.count(key)) {
        throw ParseError("unknown key '" + key + "'", LineOf(key));
      }
      continue;
    }
    for (const auto& [sub, _] : child) {
      const std::string path = key + "." + sub;
      if (!used_.count(path) && !extra.count(path)) {
        throw ParseError("unknown key '" + path + "'", LineOf(path));
      }
    }
  }
}

template <typename T, typename F>
T ParseName(const ConfigReader& r, const std::string& path, F parse) {
  const std::string v = r.Raw(path);
  try {
    return parse(v);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), r.LineOf(path));
  }
}

RunConfig ReadRunConfig(const ConfigReader& r) {
  RunConfig c;
  auto positive_int = [&](const std::string& key) {
    const long long v = r.Integer(key);
    if (v < 1) {
      throw ParseError("key '" + key + "' must be >= 1", r.LineOf(key));
    }
    return v;
  };
  c.machines = static_cast<int>(positive_int("machines"));
  c.local_steps = static_cast<int>(positive_int("local_steps"));
  c.rounds = static_cast<long>(positive_int("rounds"));
  c.dim = static_cast<std::size_t>(positive_int("dim"));
  c.lipschitz_g = r.Real("lipschitz_g");
  c.radius_b = r.Real("radius_b");
  if (r.Has("zeta")) c.zeta = r.Real("zeta");
  c.algorithm = ParseName<Algorithm>(r, "algorithm", ParseAlgorithm);
  c.seed = r.ParseUnsigned(r.Raw("seed"), "seed");
  if (r.Has("oracle")) {
    c.oracle = ParseName<OracleKind>(r, "oracle", ParseOracleKind);
  }
  if (r.Has("sigma")) c.sigma = r.Real("sigma");
  if (r.Has("smooth_h")) c.smooth_h = r.Real("smooth_h");
  if (r.Has("retain_trail")) c.retain_trail = r.Boolean("retain_trail");

  if (r.IsSection("adversary")) {
    c.adversary.kind =
        ParseName<AdversaryKind>(r, "adversary.kind", ParseAdversaryKind);
    if (r.Has("adversary.mean_scale")) {
      c.adversary.mean_scale = r.Real("adversary.mean_scale");
    }
    if (r.Has("adversary.targeting")) {
      c.adversary.targeting = ParseName<TargetingRule>(
          r, "adversary.targeting", ParseTargetingRule);
    }
    if (r.Has("adversary.center_norm")) {
      c.adversary.center_norm = r.Real("adversary.center_norm");
    }
    if (r.Has("adversary.center_jitter")) {
      c.adversary.center_jitter = r.Real("adversary.center_jitter");
    }
  } else {
    c.adversary.kind =
        ParseName<AdversaryKind>(r, "adversary", ParseAdversaryKind);
  }

  if (r.IsSection("schedule")) {
    c.schedule.mode =
        ParseName<ScheduleMode>(r, "schedule.name", ParseScheduleMode);
    if (r.Has("schedule.eta")) c.schedule.eta = r.Real("schedule.eta");
    if (r.Has("schedule.delta")) c.schedule.delta = r.Real("schedule.delta");
    if (r.Has("schedule.fstar")) c.schedule.fstar = r.Real("schedule.fstar");
    if (c.schedule.mode == ScheduleMode::kManual && !r.Has("schedule.eta")) {
      throw ParseError("manual schedule requires 'schedule.eta'",
                       r.LineOf("schedule"));
    }
  } else if (r.Has("schedule")) {
    c.schedule.mode = ParseName<ScheduleMode>(r, "schedule", ParseScheduleMode);
    if (c.schedule.mode == ScheduleMode::kManual) {
      throw ParseError("manual schedule needs a [schedule] section with eta",
                       r.LineOf("schedule"));
    }
  }
  return c;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace internal

RunConfig ParseRunConfig(const std::string& text) {
  internal::ConfigReader reader(text);
  RunConfig config = internal::ReadRunConfig(reader);
  reader.RejectUnused();
  return config;
}

RunConfig LoadRunConfig(const std::string& path) {
  return ParseRunConfig(internal::ReadFile(path));
}

std::string LedgerRecord(const RegretLedger& ledger) {
  const RunConfig& c = ledger.config;
  char fingerprint[17];
  std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                static_cast<unsigned long long>(LedgerFingerprint(ledger)));
  double consensus_max = 0.0;
  for (double v : ledger.consensus) consensus_max = std::max(consensus_max, v);
  nlohmann::json j = {
      {"algorithm", ToString(c.algorithm)},
      {"adversary", ToString(c.adversary.kind)},
      {"M", c.machines},
      {"K", c.local_steps},
      {"R", c.rounds},
      {"T", c.horizon()},
      {"d", c.dim},
      {"G", c.lipschitz_g},
      {"B", c.radius_b},
      {"zeta", c.zeta},
      {"realized_zeta", ledger.realized_zeta},
      {"sigma", c.sigma},
      {"seed", c.seed},
      {"schedule", ToString(ledger.schedule.source)},
      {"schedule_note", ledger.schedule.note},
      {"eta", ledger.schedule.eta},
      {"delta", ledger.schedule.delta},
      {"queries_per_round", ledger.queries_per_round},
      {"loss_entries", ledger.LossCount()},
      {"incurred_total", ledger.incurred_total},
      {"comparator_total", ledger.comparator_total},
      {"comparator", ledger.comparator},
      {"comparator_certified", ledger.comparator_certified},
      {"fstar", ledger.fstar},
      {"avg_regret", ledger.avg_regret},
      {"consensus_mean", ledger.ConsensusMean()},
      {"consensus_max", consensus_max},
      {"communications", ledger.communications},
      {"max_step_norm", ledger.max_step_norm},
      {"fingerprint", fingerprint},
  };
  return j.dump();
}

void AppendLedgerRecord(const RegretLedger& ledger, const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open ledger file '" + path + "'");
  out << LedgerRecord(ledger) << '\n';
}

}  // namespace fedbco
