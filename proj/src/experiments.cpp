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

#include "interfero/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

#include "interfero/complementarity.hpp"
#include "interfero/errors.hpp"
#include "interfero/rng.hpp"
#include "interfero/sampling.hpp"
#include "interfero/tomography.hpp"

namespace interfero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxCoordinate = std::size_t{1} << 24;

ComplementarityPoint theory_point(ExperimentKind kind, double angle) {
  return kind == ExperimentKind::Bmzi ? theory_bmzi(angle) : theory_pqe(angle);
}

// Runs `work(i)` for i in [0, count) on up to `threads` workers. The first
// failing index (lowest i) is rethrown after all workers finish.
template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  return kind == ExperimentKind::Bmzi ? "bmzi" : "pqe";
}

ExperimentKind parse_kind(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "bmzi") return ExperimentKind::Bmzi;
  if (lower == "pqe") return ExperimentKind::Pqe;
  throw ValidationError("kind: expected 'bmzi' or 'pqe', got '" + text + "'");
}

std::size_t num_qubits(ExperimentKind kind) { return kind == ExperimentKind::Bmzi ? 1 : 2; }

NoiseModel NoiseSpec::model() const {
  NoiseModel m;
  if (depolarizing > 0.0) m.after_each_gate.push_back(KrausChannel::depolarizing(depolarizing));
  if (amplitude_damping > 0.0) {
    m.after_each_gate.push_back(KrausChannel::amplitude_damping(amplitude_damping));
  }
  if (phase_damping > 0.0) m.after_each_gate.push_back(KrausChannel::phase_damping(phase_damping));
  m.readout = {readout_p01, readout_p10};
  return m;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  if (kind == ExperimentKind::Bmzi) {
    c.label = "q0";
    c.angle_min = -kPi;
    c.angle_max = kPi;
    c.repetitions = 128;
  } else {
    c.label = "q1q0";
    c.angle_min = 0.0;
    c.angle_max = 2.0 * kPi;
    c.repetitions = 32;
  }
  return c;
}

std::vector<double> ExperimentConfig::angle_grid() const {
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = angle_min;
    return grid;
  }
  const double step = (angle_max - angle_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = angle_min + step * static_cast<double>(i);
  grid.back() = angle_max;
  return grid;
}

void ExperimentConfig::validate() const {
  if (points < 2) throw ValidationError("points: need at least 2 grid points");
  if (points > kMaxCoordinate) throw ValidationError("points: at most 16777216 grid points");
  if (!std::isfinite(angle_min)) throw ValidationError("angle_min: not finite");
  if (!std::isfinite(angle_max)) throw ValidationError("angle_max: not finite");
  if (!analytic && shots == 0) {
    throw ValidationError("shots: must be at least 1 unless analytic = true");
  }
  if (repetitions == 0) throw ValidationError("repetitions: must be at least 1");
  if (repetitions > kMaxCoordinate) {
    throw ValidationError("repetitions: at most 16777216 repetitions");
  }
  if (label.empty()) throw ValidationError("label: must not be empty");
  if (label.find_first_of(",\n\r\"") != std::string::npos) {
    throw ValidationError("label: must not contain commas, quotes or line breaks");
  }
  auto prob = [](double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError(std::string(field) + ": must lie in [0, 1]");
    }
  };
  prob(noise.depolarizing, "noise.depolarizing");
  prob(noise.amplitude_damping, "noise.amplitude_damping");
  prob(noise.phase_damping, "noise.phase_damping");
  prob(noise.readout_p01, "noise.readout_p01");
  prob(noise.readout_p10, "noise.readout_p10");
}

Circuit build_bmzi(double alpha) {
  Circuit c(1);
  c.add(Gate::rx_neg(0, alpha));
  c.add(Gate::ix(0));
  c.add(Gate::phase(0, 0.0));
  c.add(Gate::rx_neg(0, -kPi));  // R_X(pi)
  return c;
}

Circuit build_pqe(double phi) {
  constexpr std::size_t kPolarization = 0;
  constexpr std::size_t kPath = 1;
  Circuit c(2);
  c.add(Gate::rx_neg(kPath, kPi / 2.0));
  c.add(Gate::cx(kPath, kPolarization));
  c.add(Gate::ix(kPath));
  c.add(Gate::phase(kPath, phi));
  c.add(Gate::rx_neg(kPath, kPi / 2.0));
  c.add(Gate::ctrl_h_open(kPath, kPolarization));
  c.add(Gate::ctrl_ix(kPolarization, kPath));
  return c;
}

Circuit build_circuit(ExperimentKind kind, double angle) {
  return kind == ExperimentKind::Bmzi ? build_bmzi(angle) : build_pqe(angle);
}

TheoryCurves theory_series(const ExperimentConfig& config) {
  TheoryCurves t;
  t.angles = config.angle_grid();
  for (double a : t.angles) {
    const auto p = theory_point(config.kind, a);
    t.coherence.push_back(p.coherence);
    t.predictability.push_back(p.predictability);
  }
  return t;
}

std::vector<ResultRow> ExperimentResult::rows() const {
  std::vector<ResultRow> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.row);
  return out;
}

std::vector<MetricSeries> series_from_rows(const std::vector<ResultRow>& rows,
                                           ExperimentKind kind,
                                           const std::vector<double>& angles) {
  const std::size_t n = angles.size();
  if (n == 0) throw ValidationError("series_from_rows: empty angle grid");
  std::size_t m = 0;
  for (const auto& r : rows) {
    if (r.angle_index >= n) {
      throw ValidationError("angle_index " + std::to_string(r.angle_index) +
                            " outside the grid of " + std::to_string(n) + " points");
    }
    m = std::max(m, r.repetition + 1);
  }
  if (rows.size() != n * m) {
    throw ValidationError("expected " + std::to_string(n * m) + " rows for " +
                          std::to_string(n) + " angles x " + std::to_string(m) +
                          " repetitions, got " + std::to_string(rows.size()));
  }
  std::vector<double> tc(n), tp(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = theory_point(kind, angles[i]);
    tc[i] = p.coherence;
    tp[i] = p.predictability;
  }
  std::vector<MetricSeries> series(m);
  std::vector<std::vector<bool>> seen(m, std::vector<bool>(n, false));
  for (auto& s : series) {
    s.angles = angles;
    s.theory_c = tc;
    s.theory_p = tp;
    s.experimental_c.assign(n, 0.0);
    s.experimental_p.assign(n, 0.0);
  }
  for (const auto& r : rows) {
    if (seen[r.repetition][r.angle_index]) {
      throw ValidationError("duplicate row for angle_index " + std::to_string(r.angle_index) +
                            ", repetition " + std::to_string(r.repetition));
    }
    seen[r.repetition][r.angle_index] = true;
    series[r.repetition].experimental_c[r.angle_index] = r.coherence;
    series[r.repetition].experimental_p[r.angle_index] = r.predictability;
  }
  return series;
}

ExperimentResult run_sweep(const ExperimentConfig& config, unsigned threads) {
  config.validate();
  const std::size_t nq = num_qubits(config.kind);
  const auto settings = measurement_settings(nq);
  const auto grid = config.angle_grid();
  const NoiseModel noise = config.noise.model();
  const std::size_t n = grid.size();
  const std::size_t m = config.repetitions;
  const Shots shots = config.analytic ? Shots::analytic() : Shots::finite(config.shots);
  const DensityMatrix initial = outer(StateVector::basis(nq, 0));

  // Outcome probabilities depend only on (angle, setting); sampling is the
  // only thing that changes between repetitions.
  std::vector<std::vector<double>> probabilities(n * settings.size());
  parallel_for(n, threads, [&](std::size_t i) {
    const Circuit base = build_circuit(config.kind, grid[i]);
    for (std::size_t s = 0; s < settings.size(); ++s) {
      Circuit c = base;
      c.append(basis_change(settings[s]));
      const DensityMatrix rho = simulate_density(c, noise, initial);
      probabilities[i * settings.size() + s] =
          apply_readout(outcome_probabilities(rho), noise.readout);
    }
  });

  std::vector<std::optional<CellRecord>> cells(n * m);
  parallel_for(n * m, threads, [&](std::size_t cell) {
    const std::size_t r = cell / n;
    const std::size_t i = cell % n;
    ExpectationMap expectations;
    for (std::size_t s = 0; s < settings.size(); ++s) {
      CounterRng rng(stream_key(config.master_seed, {static_cast<std::uint32_t>(i),
                                                     static_cast<std::uint32_t>(r),
                                                     static_cast<std::uint32_t>(s)}));
      const auto freq = measure_frequencies(probabilities[i * settings.size() + s], shots, rng);
      expectations.emplace(settings[s], expectation_from_frequencies(freq, settings[s]));
    }
    std::optional<TomographyResult> tomo;
    try {
      tomo = reconstruct(expectations, nq);
    } catch (const ReconstructionError& e) {
      throw ReconstructionError("angle_index " + std::to_string(i) + ", repetition " +
                                std::to_string(r) + ": " + e.what());
    }
    const auto point = evaluate(tomo->rho);
    const auto raw = evaluate(tomo->rho_raw);
    ResultRow row{to_string(config.kind), config.label, i, grid[i], r,
                  point.coherence, point.predictability, point.sum(), raw.sum(),
                  tomo->psd_violation};
    cells[cell].emplace(CellRecord{std::move(row), std::move(tomo->rho)});
  });

  ExperimentResult result{config, {}, theory_series(config), {}, {}};
  result.records.reserve(cells.size());
  for (auto& c : cells) result.records.push_back(std::move(*c));
  result.series = series_from_rows(result.rows(), config.kind, grid);
  result.report = build_report(result.series);
  return result;
}

}  // namespace interfero
