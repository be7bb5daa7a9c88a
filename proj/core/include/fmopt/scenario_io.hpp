// Copyright 2026 The fmopt Authors
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

#ifndef FMOPT_SCENARIO_IO_HPP
#define FMOPT_SCENARIO_IO_HPP

#include <cstdint>
#include <filesystem>

#include "fmopt/propagation.hpp"
#include "fmopt/scenario.hpp"

namespace fmopt {

// Reads config.txt, networks.csv, transmitters.csv, receivers.csv and, when
// present, links.csv from `dir`. Without links.csv the coefficients are
// computed with `path_model` for every pair within its cutoff. Throws
// DataError naming file, line and column on malformed input, and on any
// invariant violation validate_scenario would report.
Scenario load_scenario(const std::filesystem::path& dir,
                       const PathLossModel& path_model = {});

// Writes the exact file set load_scenario reads. Field-for-field round trip:
// doubles are printed with 17 significant digits.
void write_scenario(const Scenario& s, const std::filesystem::path& dir);

struct SyntheticParams {
  int networks = 4;
  int transmitters = 20;
  int receivers = 200;
  int channels = 8;
  double lon_min = 8.0;
  double lon_max = 11.0;
  double lat_min = 44.0;
  double lat_max = 46.0;
  // Fraction of networks assigned to the fixed-power foreign administration
  // (at least one network stays domestic; with >= 2 networks at least one is
  // foreign so the served-abroad metrics are exercisable).
  double foreign_fraction = 0.25;
  RadioParams radio;
  PathLossModel path;
};

// Deterministic seeded scenario generator. Transmitters are assigned uniformly
// at random to networks and channels; populations are log-uniform in
// [1, 50000]; the eastern quarter of the box belongs to the foreign
// administration. Output always passes validate_scenario.
Scenario generate_synthetic(std::uint64_t seed, const SyntheticParams& params);

}  // namespace fmopt

#endif  // FMOPT_SCENARIO_IO_HPP
