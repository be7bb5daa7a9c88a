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

#ifndef FMOPT_SCENARIO_HPP
#define FMOPT_SCENARIO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace fmopt {

// Global radio parameters. All powers are linear watts; dB is an IO concern.
struct RadioParams {
  double p_min_w = 1e-12;               // background noise power
  double theta = 0.031622776601683791;  // SINR coverage threshold, linear (-15 dB)
  double protection_ratio = 1.0;        // PR applied to interfering power
  double p_max_w = 1e6;                 // maximum emitted power
  double reception_floor_w = 1e-12;     // minimum useful power to count as received
  double interference_cutoff_w = 1e-14; // minimum interfering power to keep a link
};

struct Network {
  int id = 0;
  std::string admin;  // administration code, e.g. "IT", "SLO"
  std::string name;
};

struct Transmitter {
  int id = 0;
  int network_id = 0;
  std::string admin;
  int freq_khz = 0;       // the single operating channel
  double power_w = 0.0;   // current emitted power p_t
  double lon = 0.0;
  double lat = 0.0;
  bool optimizable = false;  // powers of non-optimizable transmitters stay fixed
};

struct ReceivingPoint {
  int id = 0;
  std::string admin;
  double lon = 0.0;
  double lat = 0.0;
  std::int64_t population = 0;
};

// Per (receiver, transmitter) fading coefficients, both linear in [0,1].
struct ReceptionLink {
  int receiver_id = 0;
  int transmitter_id = 0;
  double a_useful = 0.0;
  double a_interf = 0.0;
};

// Immutable world model. Build the vectors, then call rebuild_index() once;
// afterwards the scenario is safe to share across threads read-only.
class Scenario {
 public:
  RadioParams radio;
  std::vector<Network> networks;
  std::vector<Transmitter> transmitters;
  std::vector<ReceivingPoint> receivers;
  std::vector<ReceptionLink> links;

  void rebuild_index();

  const Network* network_by_id(int id) const;
  const Transmitter* transmitter_by_id(int id) const;
  const ReceivingPoint* receiver_by_id(int id) const;

  // Indices into links for one receiver, ordered by transmitter id.
  std::span<const int> links_of_receiver(int receiver_id) const;

 private:
  std::unordered_map<int, int> net_by_id_;
  std::unordered_map<int, int> tx_by_id_;
  std::unordered_map<int, int> rx_by_id_;
  std::unordered_map<int, std::vector<int>> links_by_rx_;
};

// Returns human-readable invariant violations; empty means the scenario is valid.
std::vector<std::string> validate_scenario(const Scenario& s);

}  // namespace fmopt

#endif  // FMOPT_SCENARIO_HPP
