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

#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "pielimits/errors.hpp"
#include "pielimits/numeric_format.hpp"
#include "pielimits/scenario.hpp"

using namespace pielimits;

namespace {

constexpr const char* kWorked = R"({
  "link": {"p_tx_w": 1.0, "d_tx_m": 0.22, "d_rx_m": 11.8, "wavelength_m": 1.55e-6,
           "range": "1AU", "eta_rx": 0.5, "bandwidth_hz": 1e9},
  "n_b": 1e-4,
  "m_cap": 65536,
  "coherence_time_s": 0.001,
  "sweep": {"n_a_axis": [1e-4, 1e-3], "n_b_axis": [1e-5]},
  "output_format": "json"
})";

}  // namespace

TEST_CASE("parse the worked scenario") {
  const Scenario s = parse_scenario_text(kWorked);
  CHECK(s.link.f_c_hz == constants::kSpeedOfLight / 1.55e-6);
  CHECK(s.link.range_m == constants::kAstronomicalUnit);
  CHECK(s.n_b == 1e-4);
  CHECK(s.m_cap == 65536u);
  CHECK(s.coherence_time_s == 0.001);
  CHECK(s.sweep_n_a_axis.size() == 2);
  CHECK(s.output_format == OutputFormat::kJson);
}

TEST_CASE("errors name the field") {
  auto doc = nlohmann::json::parse(kWorked);
  doc["link"].erase("d_rx_m");
  CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("d_rx_m"), ValidationError);

  doc = nlohmann::json::parse(kWorked);
  doc["link"]["range_m"] = 1.0;
  CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("range"), ValidationError);

  doc = nlohmann::json::parse(kWorked);
  doc["link"]["power"] = 1.0;
  CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("link.power"), ValidationError);

  doc = nlohmann::json::parse(kWorked);
  doc["link"]["eta_rx"] = "half";
  CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("eta_rx"), ValidationError);

  doc = nlohmann::json::parse(kWorked);
  doc["sweep"]["n_a_axis"] = {1e-3, 1e-4};
  CHECK_THROWS_AS(parse_scenario(doc), ValidationError);

  doc = nlohmann::json::parse(kWorked);
  doc["m_cap"] = 0;
  CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("m_cap"), ValidationError);

  CHECK_THROWS_AS(parse_scenario_text("{not json"), ValidationError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ValidationError);
}

TEST_CASE("scenario round-trips losslessly") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    Scenario s;
    s.link.p_tx_w = oracle::log_uniform(u(rng), 1e-3, 1e3);
    s.link.d_tx_m = oracle::log_uniform(u(rng), 1e-3, 10.0);
    s.link.d_rx_m = oracle::log_uniform(u(rng), 1e-3, 30.0);
    s.link.f_c_hz = oracle::log_uniform(u(rng), 1e9, 1e15);
    s.link.range_m = oracle::log_uniform(u(rng), 1e3, 1e14);
    s.link.eta_rx = u(rng) * 0.999 + 0.001;
    s.link.bandwidth_hz = oracle::log_uniform(u(rng), 1e3, 1e11);
    if (u(rng) < 0.5) s.n_b = u(rng);
    if (u(rng) < 0.5) s.m_cap = static_cast<std::uint64_t>(1 + u(rng) * 1e9);
    if (u(rng) < 0.5) s.coherence_time_s = u(rng);
    if (u(rng) < 0.5) s.sweep_n_a_axis = {u(rng) * 1e-3 + 1e-9, 0.5, 0.75};
    s.output_format = static_cast<OutputFormat>(i % 3);

    const Scenario back = parse_scenario_text(to_json(s).dump());
    REQUIRE(back == s);
    REQUIRE(to_json(back).dump() == to_json(s).dump());
  }
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-8) == "1e-08");
  CHECK(format_double(5.6544270246940485) == "5.654427024694049");
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::pow(10.0, u(rng));
    const std::string s = format_double(v);
    REQUIRE(std::stod(s) == v);
    REQUIRE(s.size() <= 24);
  }
}

TEST_CASE("parse_length") {
  CHECK(parse_length("1AU") == constants::kAstronomicalUnit);
  CHECK(parse_length("2AU") == 2.0 * constants::kAstronomicalUnit);
  CHECK(parse_length("384400km") == 3.844e8);
  CHECK(parse_length("1e9m") == 1e9);
  CHECK(parse_length("42") == 42.0);
  CHECK_THROWS_AS(parse_length("1ly"), ValidationError);
  CHECK_THROWS_AS(parse_length("AU"), ValidationError);
  CHECK_THROWS_AS(parse_length("-1km"), ValidationError);
}
