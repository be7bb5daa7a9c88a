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

#ifndef FMOPT_COVERAGE_HPP
#define FMOPT_COVERAGE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fmopt/scenario.hpp"

namespace fmopt {

// Power factors y, keyed by transmitter id. Transmitters without an entry
// radiate at their current power (y = 1).
class PowerFactors {
 public:
  PowerFactors() = default;
  explicit PowerFactors(std::map<int, double> values) : values_(std::move(values)) {}

  double at(int transmitter_id) const {
    auto it = values_.find(transmitter_id);
    return it == values_.end() ? 1.0 : it->second;
  }
  void set(int transmitter_id, double y) { values_[transmitter_id] = y; }
  const std::map<int, double>& values() const { return values_; }

 private:
  std::map<int, double> values_;
};

struct Interferer {
  int transmitter_id = 0;
  double power_w = 0.0;  // interfering power at y = 1: a_interf * PR * p_t
};

// Best server of one network at one receiving point, with its co-channel
// interferer set. Powers are captured at y = 1.
struct ServerAssignment {
  int receiver_id = 0;
  int network_id = 0;
  int server_transmitter_id = 0;
  double useful_power_w = 0.0;
  std::vector<Interferer> interferers;
};

struct ProtectedPair {
  int receiver_id = 0;
  int network_id = 0;

  friend bool operator==(const ProtectedPair&, const ProtectedPair&) = default;
  friend auto operator<=>(const ProtectedPair&, const ProtectedPair&) = default;
};

enum class QosLevel { Unserved, Q1, Q2, Q3, Q4 };

const char* qos_name(QosLevel q);

// Q4 at 0 dB, Q3 at -6, Q2 at -12, Q1 at -15; below -15 is unserved.
QosLevel qos_level(double sinr_db);

enum class CoverageMode { FixedServer, FreeServer };

struct PairCoverage {
  int receiver_id = 0;
  int network_id = 0;
  int server_id = 0;
  double sinr_db = 0.0;
  QosLevel qos = QosLevel::Unserved;
  bool served = false;
};

struct CoverageReport {
  CoverageMode mode = CoverageMode::FixedServer;
  std::vector<PairCoverage> pairs;  // sorted by (receiver_id, network_id)
  std::map<int, std::int64_t> served_population_by_network;
  std::map<int, std::int64_t> potential_population_by_network;
  std::map<std::string, std::int64_t> served_population_by_admin;
  std::int64_t served_population_total = 0;
  std::int64_t potential_population_total = 0;
};

// The best server of network `a` at `r`: maximum useful power at y = 1 among
// received transmitters (>= reception floor), ties broken by smallest
// transmitter id. The interferer set holds every other same-frequency
// transmitter, same network included, whose interfering power clears the
// interference cutoff. Returns nullopt when no transmitter of `a` is received.
std::optional<ServerAssignment> best_server(const Scenario& s, const ReceivingPoint& r,
                                            const Network& a);

// All defined assignments, sorted by (receiver_id, network_id).
std::vector<ServerAssignment> compute_assignments(const Scenario& s);

// (useful * y_server) / (sum of interfering powers * y_j + p_min), linear.
double sinr(const ServerAssignment& assignment, const PowerFactors& y,
            const RadioParams& params);

// Pairs whose best-server SINR at y = 1 is >= theta: the service to preserve.
std::vector<ProtectedPair> current_service_set(const Scenario& s);

// Fixed-server mode evaluates each pair's stored best server; free-server mode
// takes, per (r,a), the maximum SINR over all received candidates of the
// network, each candidate excluding itself from its interferer set.
CoverageReport coverage_report(const Scenario& s, const PowerFactors& y, CoverageMode mode);

// Header: receiver_id,network_id,server_id,sinr_db,qos,served
void write_coverage_csv(const CoverageReport& report, const std::filesystem::path& path);

}  // namespace fmopt

#endif  // FMOPT_COVERAGE_HPP
