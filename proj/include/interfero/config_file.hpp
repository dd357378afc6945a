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

// Experiment config files: UTF-8, one `key = value` per line, `#` starts a
// comment. Keys:
//
//   kind                      bmzi | pqe (sets the defaults for the rest)
//   label                     row label, e.g. a qubit id
//   points                    angle grid size
//   angle_min, angle_max      radians; accepts numbers and pi multiples
//                             such as -pi, 2*pi, pi/2, 3*pi/4
//   shots                     shots per tomography circuit
//   analytic                  true | false (exact frequencies, no sampling)
//   repetitions               m, independent repetitions of the sweep
//   master_seed               unsigned 64-bit
//   noise.depolarizing        probability, after every gate
//   noise.amplitude_damping   gamma, after every gate
//   noise.phase_damping       lambda, after every gate
//   noise.readout_p01         P(read 1 | 0)
//   noise.readout_p10         P(read 0 | 1)

#pragma once

#include <filesystem>
#include <string>

#include "interfero/experiments.hpp"

namespace interfero {

struct ConfigFile {
  ExperimentConfig config;
  bool has_master_seed = false;
};

/// Throws ValidationError naming the key (or line) that is wrong. The result
/// is not validate()d.
ConfigFile parse_config_text(const std::string& text);

/// Throws IoError if the file cannot be read.
ConfigFile load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config_text(config_to_text(c)).config == c.
std::string config_to_text(const ExperimentConfig& config);

/// Number or pi expression (see above). Throws ValidationError naming `field`.
double parse_angle(const std::string& text, const std::string& field);

}  // namespace interfero
