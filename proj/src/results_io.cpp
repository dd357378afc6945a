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

#include "interfero/results_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "interfero/config_file.hpp"
#include "interfero/errors.hpp"

namespace interfero {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T parse_field(const std::string& text, const char* column, int line_no) {
  T v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError("results.csv line " + std::to_string(line_no) + ": bad " + column +
                          " value '" + text + "'");
  }
  return v;
}

json config_json(const ExperimentConfig& c) {
  return {{"kind", to_string(c.kind)},
          {"label", c.label},
          {"points", c.points},
          {"angle_min", c.angle_min},
          {"angle_max", c.angle_max},
          {"shots", c.shots},
          {"analytic", c.analytic},
          {"repetitions", c.repetitions},
          {"master_seed", c.master_seed},
          {"noise",
           {{"depolarizing", c.noise.depolarizing},
            {"amplitude_damping", c.noise.amplitude_damping},
            {"phase_damping", c.noise.phase_damping},
            {"readout_p01", c.noise.readout_p01},
            {"readout_p10", c.noise.readout_p10}}}};
}

json decomposition_json(const MseDecomposition& d) {
  return {{"mse_sum", d.mse_sum}, {"mse_c", d.mse_c}, {"mse_p", d.mse_p}, {"corr", d.corr}};
}

}  // namespace

std::string tool_version() { return "interfero 0.1.0"; }

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  if (s == "-0.000000000000") s.erase(0, 1);
  return s;
}

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.kind + ',' + r.label + ',' + std::to_string(r.angle_index) + ',' +
           format_real(r.angle) + ',' + std::to_string(r.repetition) + ',' +
           format_real(r.coherence) + ',' + format_real(r.predictability) + ',' +
           format_real(r.sum) + ',' + format_real(r.sum_raw) + ',' +
           format_real(r.psd_violation) + '\n';
  }
  return out;
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ValidationError("results.csv: missing or unexpected header");
  }
  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw ValidationError("results.csv line " + std::to_string(line_no) + ": expected 10 fields, got " +
                            std::to_string(f.size()));
    }
    ResultRow r;
    r.kind = f[0];
    r.label = f[1];
    r.angle_index = parse_field<std::size_t>(f[2], "angle_index", line_no);
    r.angle = parse_field<double>(f[3], "angle", line_no);
    r.repetition = parse_field<std::size_t>(f[4], "repetition", line_no);
    r.coherence = parse_field<double>(f[5], "coherence", line_no);
    r.predictability = parse_field<double>(f[6], "predictability", line_no);
    r.sum = parse_field<double>(f[7], "sum", line_no);
    r.sum_raw = parse_field<double>(f[8], "sum_raw", line_no);
    r.psd_violation = parse_field<double>(f[9], "psd_violation", line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string summary_json(const ExperimentConfig& config, const MseReport& report) {
  json per = json::array();
  for (const auto& d : report.per_experiment) per.push_back(decomposition_json(d));
  const auto& dist = report.distribution;
  json doc = {{"tool", tool_version()},
              {"config", config_json(config)},
              {"mse",
               {{"mean", decomposition_json(report.mean)},
                {"per_experiment", per},
                {"distribution",
                 {{"count", dist.count},
                  {"mean", dist.mean},
                  {"std", dist.std},
                  {"min", dist.min},
                  {"max", dist.max},
                  {"overflow", dist.overflow},
                  {"histogram", dist.histogram}}}}}};
  return doc.dump(2) + '\n';
}

ExperimentConfig config_from_summary(const std::string& json_text) {
  try {
    const json doc = json::parse(json_text);
    const json& c = doc.at("config");
    ExperimentConfig cfg = ExperimentConfig::defaults(parse_kind(c.at("kind").get<std::string>()));
    cfg.label = c.at("label").get<std::string>();
    cfg.points = c.at("points").get<std::size_t>();
    cfg.angle_min = c.at("angle_min").get<double>();
    cfg.angle_max = c.at("angle_max").get<double>();
    cfg.shots = c.at("shots").get<std::uint64_t>();
    cfg.analytic = c.at("analytic").get<bool>();
    cfg.repetitions = c.at("repetitions").get<std::size_t>();
    cfg.master_seed = c.at("master_seed").get<std::uint64_t>();
    const json& n = c.at("noise");
    cfg.noise.depolarizing = n.at("depolarizing").get<double>();
    cfg.noise.amplitude_damping = n.at("amplitude_damping").get<double>();
    cfg.noise.phase_damping = n.at("phase_damping").get<double>();
    cfg.noise.readout_p01 = n.at("readout_p01").get<double>();
    cfg.noise.readout_p10 = n.at("readout_p10").get<double>();
    return cfg;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("summary.json: ") + e.what());
  }
}

std::string manifest_json(const RunManifest& m) {
  json doc = {{"tool_version", m.tool_version},
              {"master_seed", m.master_seed},
              {"timestamp", m.timestamp},
              {"config", config_json(m.config)},
              {"config_text", config_to_text(m.config)},
              {"outputs", m.outputs}};
  return doc.dump(2) + '\n';
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> write_results(const ExperimentResult& result,
                                                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  const auto csv = dir / kResultsCsv;
  const auto summary = dir / kSummaryJson;
  write_file(csv, results_csv(result.rows()));
  write_file(summary, summary_json(result.config, result.report));
  return {csv, summary};
}

StoredRun read_run(const std::filesystem::path& dir) {
  StoredRun run;
  run.config = config_from_summary(read_file(dir / kSummaryJson));
  run.rows = parse_results_csv(read_file(dir / kResultsCsv));
  return run;
}

MseReport analyze(const StoredRun& run) {
  const auto series = series_from_rows(run.rows, run.config.kind, run.config.angle_grid());
  return build_report(series);
}

}  // namespace interfero
