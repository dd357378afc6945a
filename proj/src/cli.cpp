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

#include "interfero/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "interfero/config_file.hpp"
#include "interfero/errors.hpp"
#include "interfero/experiments.hpp"
#include "interfero/render.hpp"
#include "interfero/results_io.hpp"

namespace interfero {

namespace fs = std::filesystem;

namespace {

constexpr const char* kAnalysisJson = "analysis.json";
constexpr const char* kTableTxt = "summary_table.txt";
constexpr const char* kTableSvg = "summary_table.svg";

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string curves_name(const std::string& label) { return "curves_" + file_safe(label) + ".svg"; }

// Config text, or the config_text member of a manifest written by `run`.
ConfigFile load_config_or_manifest(const fs::path& path) {
  if (path.extension() != ".json") return load_config(path);
  const std::string text = read_file(path);
  try {
    const auto doc = nlohmann::json::parse(text);
    return parse_config_text(doc.at("config_text").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": not a run manifest: " + e.what());
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

struct Figures {
  bool text = false;
  bool svg = false;
};

// Writes the requested figures for a set of runs into `dir`, returns the file
// names written.
std::vector<std::string> write_figures(const std::vector<StoredRun>& runs,
                                       const std::vector<MseReport>& reports, const fs::path& dir,
                                       Figures figures) {
  std::vector<std::string> written;
  std::vector<SummaryRow> rows;
  std::set<std::string> names;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& run = runs[k];
    rows.push_back(summary_row(run.config.label, reports[k]));
    const std::string name = curves_name(run.config.label);
    if (!names.insert(name).second) {
      throw ValidationError("label: '" + run.config.label + "' appears in more than one run");
    }
    if (figures.svg) {
      write_file(dir / name, render_curves(curve_data(run.rows, run.config)));
      written.push_back(name);
    }
  }
  const auto table = render_sparkline_table(rows);
  if (figures.svg) {
    write_file(dir / kTableSvg, table.svg);
    written.push_back(kTableSvg);
  }
  if (figures.text) {
    write_file(dir / kTableTxt, table.text);
    written.push_back(kTableTxt);
  }
  return written;
}

int cmd_theory(const std::string& kind_text, std::size_t points, const std::string& amin,
               const std::string& amax, std::ostream& out) {
  ExperimentConfig c = ExperimentConfig::defaults(parse_kind(kind_text));
  c.points = points;
  if (!amin.empty()) c.angle_min = parse_angle(amin, "angle-min");
  if (!amax.empty()) c.angle_max = parse_angle(amax, "angle-max");
  c.analytic = true;
  c.validate();
  const auto t = theory_series(c);
  out << "angle,coherence,predictability,sum\n";
  for (std::size_t i = 0; i < t.angles.size(); ++i) {
    out << format_real(t.angles[i]) << ',' << format_real(t.coherence[i]) << ','
        << format_real(t.predictability[i]) << ','
        << format_real(t.coherence[i] + t.predictability[i]) << '\n';
  }
  return kExitOk;
}

int cmd_run(const fs::path& config_path, const fs::path& out_dir, std::optional<std::uint64_t> seed,
            unsigned threads, const std::string& format, std::ostream& out) {
  ConfigFile file = load_config_or_manifest(config_path);
  ExperimentConfig config = file.config;
  config.master_seed =
      resolve_seed(seed, file.has_master_seed ? std::optional(config.master_seed) : std::nullopt,
                   std::getenv(kSeedEnv));
  config.validate();

  const ExperimentResult result = run_sweep(config, threads);
  ensure_dir(out_dir);
  std::vector<std::string> outputs;
  for (const auto& p : write_results(result, out_dir)) outputs.push_back(p.filename().string());

  const Figures figures{format == "text" || format == "all", format == "svg" || format == "all"};
  if (figures.text || figures.svg) {
    const StoredRun stored{config, result.rows()};
    for (auto& name : write_figures({stored}, {result.report}, out_dir, figures)) {
      outputs.push_back(std::move(name));
    }
  }

  RunManifest manifest{config, tool_version(), config.master_seed, utc_timestamp(), outputs};
  write_file(out_dir / kManifestJson, manifest_json(manifest));

  out << "wrote " << outputs.size() + 1 << " files to " << out_dir.string() << "\n";
  out << "mse(C+P) mean " << format_real(result.report.mean.mse_sum) << ", corr mean "
      << format_real(result.report.mean.corr) << "\n";
  return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& dirs, std::ostream& out) {
  std::vector<SummaryRow> rows;
  for (const auto& d : dirs) {
    const StoredRun run = read_run(d);
    const MseReport report = analyze(run);
    write_file(fs::path(d) / kAnalysisJson, summary_json(run.config, report));
    rows.push_back(summary_row(run.config.label, report));
  }
  out << render_sparkline_table(rows).text;
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& dirs, const fs::path& out_dir, std::ostream& out) {
  std::vector<StoredRun> runs;
  std::vector<MseReport> reports;
  for (const auto& d : dirs) {
    runs.push_back(read_run(d));
    reports.push_back(analyze(runs.back()));
  }
  ensure_dir(out_dir);
  const auto written = write_figures(runs, reports, out_dir, Figures{true, true});
  for (const auto& name : written) out << (out_dir / name).string() << "\n";
  return kExitOk;
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag,
                           std::optional<std::uint64_t> config_seed, const char* env_value) {
  if (flag) return *flag;
  if (config_seed) return *config_seed;
  if (env_value != nullptr && *env_value != '\0') {
    const std::string text = env_value;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ValidationError(std::string(kSeedEnv) + ": expected an unsigned integer, got '" +
                            text + "'");
    }
    return v;
  }
  return 1;
}

std::string file_safe(const std::string& label) {
  std::string s = label;
  for (char& c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complementarity experiments on simulated interferometer circuits", "interfero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string kind = "bmzi";
  std::size_t points = 60;
  std::string amin, amax;
  auto* theory = app.add_subcommand("theory", "Print closed-form C, P and C+P as CSV");
  theory->add_option("--kind", kind, "bmzi or pqe")->required();
  theory->add_option("--points", points, "Number of angles")->capture_default_str();
  theory->add_option("--angle-min", amin, "First angle (radians, pi expressions allowed)");
  theory->add_option("--angle-max", amax, "Last angle");

  std::string config_path;
  std::string out_dir = "results";
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string format = "all";
  auto* run = app.add_subcommand("run", "Run a sweep and write results");
  run->add_option("--config", config_path, "Config file or run manifest")->required();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--seed", seed, "Master seed, overrides the config");
  run->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  run->add_option("--format", format, "Report files to write besides the CSV")
      ->check(CLI::IsMember({"csv", "text", "svg", "all"}))
      ->capture_default_str();

  std::vector<std::string> analyze_dirs;
  auto* analyze_cmd = app.add_subcommand("analyze", "Recompute MSE reports from stored results");
  analyze_cmd->add_option("dirs", analyze_dirs, "Run directories")->required();

  std::vector<std::string> report_dirs;
  std::string report_out;
  auto* report = app.add_subcommand("report", "Render curves and the summary table");
  report->add_option("--out", report_out, "Output directory")->required();
  report->add_option("dirs", report_dirs, "Run directories")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (theory->parsed()) return cmd_theory(kind, points, amin, amax, out);
    if (run->parsed()) return cmd_run(config_path, out_dir, seed, threads, format, out);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_dirs, out);
    return cmd_report(report_dirs, report_out, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace interfero
