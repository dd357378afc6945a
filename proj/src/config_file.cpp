// Copyright 2026 The Interfero Authors
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

#include "interfero/config_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& field) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ValidationError(field + ": expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& field) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError(field + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& text, const std::string& field) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ValidationError(field + ": expected true or false, got '" + text + "'");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double parse_angle(const std::string& text, const std::string& field) {
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) return parse_double(text, field);

  // [sign][k*]pi[/j]
  std::string head = text.substr(0, pi_pos);
  std::string tail = text.substr(pi_pos + 2);
  double sign = 1.0;
  if (!head.empty() && head.front() == '-') {
    sign = -1.0;
    head.erase(0, 1);
  }
  double factor = 1.0;
  if (!head.empty()) {
    if (head.back() != '*') throw ValidationError(field + ": cannot parse angle '" + text + "'");
    head.pop_back();
    factor = parse_double(head, field);
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw ValidationError(field + ": cannot parse angle '" + text + "'");
    divisor = parse_double(tail.substr(1), field);
    if (divisor == 0.0) throw ValidationError(field + ": division by zero in '" + text + "'");
  }
  return sign * factor * std::numbers::pi / divisor;
}

ConfigFile parse_config_text(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ValidationError("line " + std::to_string(line_no) + ": empty key");
    if (value.empty()) throw ValidationError(key + ": missing value");
    if (!entries.emplace(key, std::make_pair(value, line_no)).second) {
      throw ValidationError(key + ": given more than once");
    }
  }

  ConfigFile out;
  if (auto it = entries.find("kind"); it != entries.end()) {
    out.config = ExperimentConfig::defaults(parse_kind(it->second.first));
    entries.erase(it);
  } else {
    out.config = ExperimentConfig::defaults(ExperimentKind::Bmzi);
  }
  ExperimentConfig& c = out.config;
  for (const auto& [key, entry] : entries) {
    const std::string& v = entry.first;
    if (key == "label") {
      c.label = v;
    } else if (key == "points") {
      c.points = parse_unsigned(v, key);
    } else if (key == "angle_min") {
      c.angle_min = parse_angle(v, key);
    } else if (key == "angle_max") {
      c.angle_max = parse_angle(v, key);
    } else if (key == "shots") {
      c.shots = parse_unsigned(v, key);
    } else if (key == "analytic") {
      c.analytic = parse_bool(v, key);
    } else if (key == "repetitions") {
      c.repetitions = parse_unsigned(v, key);
    } else if (key == "master_seed") {
      c.master_seed = parse_unsigned(v, key);
      out.has_master_seed = true;
    } else if (key == "noise.depolarizing") {
      c.noise.depolarizing = parse_double(v, key);
    } else if (key == "noise.amplitude_damping") {
      c.noise.amplitude_damping = parse_double(v, key);
    } else if (key == "noise.phase_damping") {
      c.noise.phase_damping = parse_double(v, key);
    } else if (key == "noise.readout_p01") {
      c.noise.readout_p01 = parse_double(v, key);
    } else if (key == "noise.readout_p10") {
      c.noise.readout_p10 = parse_double(v, key);
    } else {
      throw ValidationError(key + ": unknown key (line " + std::to_string(entry.second) + ")");
    }
  }
  return out;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string config_to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "kind = " << to_string(c.kind) << '\n'
      << "label = " << c.label << '\n'
      << "points = " << c.points << '\n'
      << "angle_min = " << format_double(c.angle_min) << '\n'
      << "angle_max = " << format_double(c.angle_max) << '\n'
      << "shots = " << c.shots << '\n'
      << "analytic = " << (c.analytic ? "true" : "false") << '\n'
      << "repetitions = " << c.repetitions << '\n'
      << "master_seed = " << c.master_seed << '\n'
      << "noise.depolarizing = " << format_double(c.noise.depolarizing) << '\n'
      << "noise.amplitude_damping = " << format_double(c.noise.amplitude_damping) << '\n'
      << "noise.phase_damping = " << format_double(c.noise.phase_damping) << '\n'
      << "noise.readout_p01 = " << format_double(c.noise.readout_p01) << '\n'
      << "noise.readout_p10 = " << format_double(c.noise.readout_p10) << '\n';
  return out.str();
}

}  // namespace interfero
