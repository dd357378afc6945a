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

#include "interfero/rng.hpp"

#include "interfero/errors.hpp"

namespace interfero {

std::uint64_t stream_key(std::uint64_t master_seed, StreamId id) {
  if (id.angle_index >= (1U << 24) || id.repetition >= (1U << 24) || id.setting >= (1U << 16)) {
    throw ValidationError("stream coordinates exceed the packable range");
  }
  const std::uint64_t packed = (std::uint64_t{id.angle_index} << 40) |
                               (std::uint64_t{id.repetition} << 16) | id.setting;
  return mix64(packed ^ mix64(master_seed));
}

}  // namespace interfero
