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

#include "pielimits/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pielimits/errors.hpp"
#include "pielimits/numeric_format.hpp"
#include "pielimits/sweep.hpp"

namespace pielimits {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      throw ValidationError("scenario: unknown key '" + where + item.key() + "'");
    }
  }
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("scenario: missing field '" + where + key + "'");
  if (!it->is_number()) {
    throw ValidationError("scenario: field '" + where + key + "' must be a number");
  }
  return it->get<double>();
}

std::optional<double> optional_number(const json& obj, const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  return number_field(obj, key, "");
}

std::vector<double> axis_field(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_array()) throw ValidationError("scenario: 'sweep." + key + "' must be an array");
  std::vector<double> axis;
  for (const auto& v : *it) {
    if (!v.is_number()) {
      throw ValidationError("scenario: 'sweep." + key + "' must contain only numbers");
    }
    axis.push_back(v.get<double>());
  }
  validate_axis(axis, key.c_str());
  return axis;
}

LinkGeometry parse_link(const json& link) {
  if (!link.is_object()) throw ValidationError("scenario: 'link' must be an object");
  reject_unknown_keys(link,
                      {"p_tx_w", "d_tx_m", "d_rx_m", "f_c_hz", "wavelength_m", "range_m", "range",
                       "eta_rx", "bandwidth_hz"},
                      "link.");
  LinkGeometry g;
  g.p_tx_w = number_field(link, "p_tx_w", "link.");
  g.d_tx_m = number_field(link, "d_tx_m", "link.");
  g.d_rx_m = number_field(link, "d_rx_m", "link.");

  const bool has_f = link.contains("f_c_hz");
  const bool has_lambda = link.contains("wavelength_m");
  if (has_f == has_lambda) {
    throw ValidationError("scenario: give exactly one of 'link.f_c_hz' or 'link.wavelength_m'");
  }
  if (has_f) {
    g.f_c_hz = number_field(link, "f_c_hz", "link.");
  } else {
    const double lambda = number_field(link, "wavelength_m", "link.");
    if (!(lambda > 0.0)) throw ValidationError("scenario: 'link.wavelength_m' must be > 0");
    g.f_c_hz = constants::kSpeedOfLight / lambda;
  }

  const bool has_range_m = link.contains("range_m");
  const bool has_range = link.contains("range");
  if (has_range_m == has_range) {
    throw ValidationError("scenario: give exactly one of 'link.range_m' or 'link.range'");
  }
  if (has_range_m) {
    g.range_m = number_field(link, "range_m", "link.");
  } else {
    const auto& r = link.at("range");
    if (!r.is_string()) throw ValidationError("scenario: 'link.range' must be a string like \"1AU\"");
    g.range_m = parse_length(r.get<std::string>());
  }

  g.eta_rx = number_field(link, "eta_rx", "link.");
  g.bandwidth_hz = number_field(link, "bandwidth_hz", "link.");
  g.validate();
  return g;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw ValidationError("scenario: 'output_format' must be text, json or csv");
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      break;
  }
  return "text";
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ValidationError("scenario: top level must be an object");
  reject_unknown_keys(doc,
                      {"link", "n_b", "m_cap", "coherence_time_s", "bandwidth_cap_hz", "sweep",
                       "output_format"},
                      "");
  if (!doc.contains("link")) throw ValidationError("scenario: missing field 'link'");

  Scenario s;
  s.link = parse_link(doc.at("link"));
  s.n_b = optional_number(doc, "n_b");
  if (s.n_b && !(*s.n_b >= 0.0 && std::isfinite(*s.n_b))) {
    throw ValidationError("scenario: 'n_b' must be finite and >= 0");
  }
  if (doc.contains("m_cap")) {
    const auto& m = doc.at("m_cap");
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
      throw ValidationError("scenario: 'm_cap' must be an integer >= 1");
    }
    s.m_cap = m.get<std::uint64_t>();
  }
  s.coherence_time_s = optional_number(doc, "coherence_time_s");
  s.bandwidth_cap_hz = optional_number(doc, "bandwidth_cap_hz");
  if (doc.contains("sweep")) {
    const auto& sw = doc.at("sweep");
    if (!sw.is_object()) throw ValidationError("scenario: 'sweep' must be an object");
    reject_unknown_keys(sw, {"n_a_axis", "n_b_axis"}, "sweep.");
    s.sweep_n_a_axis = axis_field(sw, "n_a_axis");
    s.sweep_n_b_axis = axis_field(sw, "n_b_axis");
  }
  if (doc.contains("output_format")) {
    const auto& f = doc.at("output_format");
    if (!f.is_string()) throw ValidationError("scenario: 'output_format' must be a string");
    s.output_format = parse_format(f.get<std::string>());
  }
  return s;
}

Scenario parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("scenario: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

json to_json(const Scenario& s) {
  json doc;
  doc["link"] = {
      {"p_tx_w", s.link.p_tx_w},     {"d_tx_m", s.link.d_tx_m},   {"d_rx_m", s.link.d_rx_m},
      {"f_c_hz", s.link.f_c_hz},     {"range_m", s.link.range_m}, {"eta_rx", s.link.eta_rx},
      {"bandwidth_hz", s.link.bandwidth_hz},
  };
  if (s.n_b) doc["n_b"] = *s.n_b;
  if (s.m_cap) doc["m_cap"] = *s.m_cap;
  if (s.coherence_time_s) doc["coherence_time_s"] = *s.coherence_time_s;
  if (s.bandwidth_cap_hz) doc["bandwidth_cap_hz"] = *s.bandwidth_cap_hz;
  if (!s.sweep_n_a_axis.empty() || !s.sweep_n_b_axis.empty()) {
    json sw = json::object();
    if (!s.sweep_n_a_axis.empty()) sw["n_a_axis"] = s.sweep_n_a_axis;
    if (!s.sweep_n_b_axis.empty()) sw["n_b_axis"] = s.sweep_n_b_axis;
    doc["sweep"] = sw;
  }
  doc["output_format"] = format_name(s.output_format);
  return doc;
}

}  // namespace pielimits
