// Copyright 2026 The pielimits Authors
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

#pragma once

// Scenario files: a JSON document describing a link and the computations to
// run on it. Every physical quantity carries its unit in the key name.
//
//   {
//     "link": {
//       "p_tx_w": 1.0, "d_tx_m": 0.22, "d_rx_m": 11.8,
//       "f_c_hz": 1.934e14,          // or "wavelength_m": 1.55e-6
//       "range_m": 1.496e11,         // or "range": "1AU" (m, km, AU)
//       "eta_rx": 0.5, "bandwidth_hz": 1e9
//     },
//     "n_b": 1e-4,
//     "m_cap": 65536,                 // optional
//     "coherence_time_s": 1e-3,       // optional
//     "bandwidth_cap_hz": 1e10,       // optional
//     "sweep": {"n_a_axis": [...], "n_b_axis": [...]},  // optional
//     "output_format": "text"         // text | json | csv
//   }

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pielimits/link_budget.hpp"

namespace pielimits {

enum class OutputFormat { kText, kJson, kCsv };

struct Scenario {
  LinkGeometry link;
  std::optional<double> n_b;
  std::optional<std::uint64_t> m_cap;
  std::optional<double> coherence_time_s;
  std::optional<double> bandwidth_cap_hz;
  std::vector<double> sweep_n_a_axis;
  std::vector<double> sweep_n_b_axis;
  OutputFormat output_format = OutputFormat::kText;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ValidationError naming the missing or malformed key.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Canonical form: f_c_hz and range_m in SI, optional keys only when set.
nlohmann::json to_json(const Scenario& scenario);

}  // namespace pielimits
