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

#ifndef FMOPT_PROPAGATION_HPP
#define FMOPT_PROPAGATION_HPP

#include <span>
#include <utility>

#include "fmopt/scenario.hpp"

namespace fmopt {

// Synthetic distance-power-law fading model. Stands in for scenarios that do
// not ship explicit link coefficients.
struct PathLossModel {
  double reference_loss = 1e-6;     // linear fading at 1 km, in (0,1]
  double exponent = 3.0;            // path-loss exponent, >= 2
  double interference_margin = 1.0; // >= 1; a_interf = min(1, margin * a_useful)
  double cutoff_km = 150.0;         // both coefficients are 0 beyond this distance
};

double db_from_linear(double x);   // 10*log10(x); throws on x <= 0
double linear_from_db(double db);  // 10^(db/10)

// Power sum carried out in the linear domain: 10*log10(sum 10^(v/10)).
double combine_powers_db(std::span<const double> values_db);

// p_rt = a_rt * p_t, scaled by the power factor y in [0,1].
double received_useful_power(const ReceptionLink& link, double p_t_w, double y_t);

// Interfering power includes the protection ratio: a_interf * PR * p_t * y.
double received_interfering_power(const ReceptionLink& link, double p_t_w, double y_t,
                                  double protection_ratio);

// Great-circle distance, spherical Earth of radius 6371 km. Colocated points
// clamp to 0.001 km.
double great_circle_km(double lon1, double lat1, double lon2, double lat2);

// (a_useful, a_interf) for a transmitter-receiver pair under the synthetic model.
std::pair<double, double> path_fading(const Transmitter& tx, const ReceivingPoint& rx,
                                      const PathLossModel& m);

}  // namespace fmopt

#endif  // FMOPT_PROPAGATION_HPP
