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

#include "pielimits/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pielimits/channel_oracle.hpp"
#include "pielimits/errors.hpp"
#include "pielimits/link_budget.hpp"
#include "pielimits/numeric_format.hpp"
#include "pielimits/optimizer.hpp"
#include "pielimits/pie_model.hpp"
#include "pielimits/scenario.hpp"
#include "pielimits/sweep.hpp"

namespace pielimits::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Raised for flag combinations the parser cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  bool quiet = false;
  std::string output;
};

struct Context {
  const GlobalOptions& global;
  std::ostream& out;
  std::ostream& err;

  void warn(const std::string& msg) const {
    if (!global.quiet) err << "warning: " << msg << '\n';
  }

  // Sends a finished document to --output or stdout.
  void emit(const std::string& text) const {
    if (global.output.empty()) {
      out << text;
      return;
    }
    std::ofstream file(global.output, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file '" + global.output + "'");
    file << text;
  }

  std::string banner() const {
    return global.quiet ? std::string{} : std::string("pielimits ") + kVersion + '\n';
  }
};

std::string num(double v) { return format_double(v); }

std::string dump(const json& doc) { return doc.dump(2) + '\n'; }

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "' as a number");
    }
  }
  if (values.empty()) throw UsageError(std::string(flag) + " is empty");
  return values;
}

std::vector<double> parse_lengths(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_length(item));
  if (values.empty()) throw UsageError("--range-axis is empty");
  return values;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  std::optional<double> n_s;
  std::optional<double> n_a;
  double n_b = 0.0;
  std::uint64_t m = 1;
};

int cmd_bound(const Context& ctx, const BoundArgs& a) {
  if (a.n_s.has_value() == a.n_a.has_value()) {
    throw UsageError("bound: give exactly one of --ns or --na");
  }
  double n_s = 0.0;
  double pie = 0.0;
  if (a.n_s) {
    n_s = *a.n_s;
    pie = pie_bound(n_s, a.n_b, a.m);
  } else {
    const OperatingPoint point{*a.n_a, a.n_b};
    const auto format = ModulationFormat::for_point(point, a.m);
    n_s = format.n_s;
    pie = pie_bound(point, format);
  }
  const auto probs = photocount_probabilities(n_s, a.n_b);

  if (ctx.global.json) {
    json doc{{"pie_bits_per_photon", pie},
             {"p_c", probs.signal.value()},
             {"p_b", probs.background.value()}};
    ctx.emit(dump(doc));
    return kExitOk;
  }
  std::ostringstream s;
  s << ctx.banner();
  s << "n_s = " << num(n_s) << ", n_b = " << num(a.n_b) << ", M = " << a.m << '\n';
  s << "p_c = " << num(probs.signal.value()) << ", p_b = " << num(probs.background.value()) << '\n';
  s << "PIE bound = " << num(pie) << " bits/photon\n";
  ctx.emit(s.str());
  return kExitOk;
}

// ------------------------------------------------------------- optimize

struct OptimizeArgs {
  double n_a = 0.0;
  double n_b = 0.0;
  std::optional<std::uint64_t> m_cap;
  bool continuous = false;
};

int cmd_optimize(const Context& ctx, const OptimizeArgs& a) {
  if (!(a.n_a > 0.0)) {
    throw UsageError("optimize: n_a must be > 0; use `limit` for the n_a -> 0 limit");
  }
  const OperatingPoint point{a.n_a, a.n_b};
  const OptimizeOptions options{a.m_cap};
  const PieResult r = optimize_format_order(point, options);
  const double log2_m = std::log2(static_cast<double>(r.m_star));
  const bool certified = satisfies_local_optimality(point, r, options);
  std::optional<ContinuousOptimum> relaxed;
  if (a.continuous) relaxed = optimize_format_order_continuous(point, options);

  if (r.capped) ctx.warn("the order cap is binding; M* is the cap, not the unconstrained optimum");

  if (ctx.global.json) {
    json doc{{"n_a", a.n_a},
             {"n_b", a.n_b},
             {"pie_bits_per_photon", r.pie_star},
             {"m_star", r.m_star},
             {"log2_m_star", log2_m},
             {"n_s_star", r.n_s_star},
             {"converged", r.converged},
             {"capped", r.capped},
             {"certified", certified},
             {"evaluations", r.evaluations}};
    if (relaxed) {
      doc["m_continuous"] = relaxed->order_m;
      doc["pie_continuous_bits_per_photon"] = relaxed->pie;
    }
    ctx.emit(dump(doc));
    return kExitOk;
  }
  std::ostringstream s;
  s << ctx.banner();
  s << "n_a = " << num(a.n_a) << ", n_b = " << num(a.n_b) << '\n';
  s << "PIE* = " << num(r.pie_star) << " bits/photon\n";
  s << "M* = " << r.m_star << " (log2 M* = " << num(log2_m) << ")\n";
  s << "n_s* = " << num(r.n_s_star) << '\n';
  s << "converged = " << (r.converged ? "true" : "false")
    << ", capped = " << (r.capped ? "true" : "false")
    << ", certified = " << (certified ? "true" : "false")
    << ", evaluations = " << r.evaluations << '\n';
  if (relaxed) {
    s << "continuous M = " << num(relaxed->order_m) << ", PIE = " << num(relaxed->pie)
      << " bits/photon\n";
  }
  ctx.emit(s.str());
  return kExitOk;
}

// ---------------------------------------------------------------- limit

struct LimitArgs {
  double n_b = 0.0;
  bool approx = false;
  bool both = false;
};

int cmd_limit(const Context& ctx, const LimitArgs& a) {
  std::optional<VanishingSignalOptimum> numeric;
  std::optional<double> approx;
  if (!a.approx || a.both) numeric = optimize_vanishing_signal(a.n_b);
  if (a.approx || a.both) {
    approx = pie_approx_lambert(a.n_b);
    if (2.0 / a.n_b <= std::numbers::e) {
      ctx.warn("n_b >= 2/e: the Lambert-W approximation has passed its turning point and is "
               "not meaningful here (it assumes n_b << 1)");
    }
  }
  std::optional<double> gap;
  if (numeric && approx) gap = std::abs(*approx - numeric->pie_star) / numeric->pie_star;

  if (ctx.global.json) {
    json doc{{"n_b", a.n_b}};
    if (numeric) {
      doc["numerical_bits_per_photon"] = numeric->pie_star;
      doc["n_s_star"] = numeric->n_s_star;
    }
    if (approx) doc["approx_bits_per_photon"] = *approx;
    if (gap) doc["relative_gap"] = *gap;
    ctx.emit(dump(doc));
    return kExitOk;
  }
  std::ostringstream s;
  s << ctx.banner();
  s << "n_b = " << num(a.n_b) << '\n';
  if (numeric) {
    s << "numerical limit PIE* = " << num(numeric->pie_star) << " bits/photon (n_s* = "
      << num(numeric->n_s_star) << ")\n";
  }
  if (approx) s << "Lambert-W approximation = " << num(*approx) << " bits/photon\n";
  if (gap) s << "relative gap = " << num(*gap) << '\n';
  ctx.emit(s.str());
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string scenario;
  std::string na_axis;
  std::string nb_axis;
  double na_min = kDefaultAxisMin;
  double na_max = kDefaultAxisMax;
  double nb_min = kDefaultAxisMin;
  double nb_max = kDefaultAxisMax;
  std::size_t points = kDefaultAxisPoints;
  std::optional<std::uint64_t> m_cap;
};

constexpr const char* kSweepHeader = "n_a,n_b,pie_bits_per_photon,m_star,log2_m_star,n_s_star,converged";

std::string cell_value(const SweepCell& c, int panel) {
  if (!c.ok()) return "nan";
  switch (panel) {
    case 0:
      return num(c.result.pie_star);
    case 1:
      return num(c.result.n_s_star);
    default:
      return num(std::log2(static_cast<double>(c.result.m_star)));
  }
}

std::string panel_csv(const SweepGrid& grid, int panel, const char* quantity) {
  std::ostringstream s;
  s << quantity << ":n_a/n_b";
  for (double n_b : grid.n_b_axis()) s << ',' << num(n_b);
  s << '\n';
  for (std::size_t i = 0; i < grid.n_a_axis().size(); ++i) {
    s << num(grid.n_a_axis()[i]);
    for (std::size_t j = 0; j < grid.n_b_axis().size(); ++j) s << ',' << cell_value(grid.at(i, j), panel);
    s << '\n';
  }
  return s.str();
}

std::string long_csv(const SweepGrid& grid) {
  const bool with_errors = grid.failed_cells() > 0;
  std::ostringstream s;
  s << kSweepHeader << (with_errors ? ",error" : "") << '\n';
  for (std::size_t i = 0; i < grid.n_a_axis().size(); ++i) {
    for (std::size_t j = 0; j < grid.n_b_axis().size(); ++j) {
      const auto& c = grid.at(i, j);
      s << num(grid.n_a_axis()[i]) << ',' << num(grid.n_b_axis()[j]) << ',';
      if (c.ok()) {
        s << num(c.result.pie_star) << ',' << c.result.m_star << ','
          << num(std::log2(static_cast<double>(c.result.m_star))) << ',' << num(c.result.n_s_star)
          << ',' << (c.result.converged ? "true" : "false");
      } else {
        s << "nan,,nan,nan,false";
      }
      if (with_errors) {
        std::string e = c.error;
        for (auto& ch : e) {
          if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
        }
        s << ',' << e;
      }
      s << '\n';
    }
  }
  return s.str();
}

json sweep_json(const SweepGrid& grid) {
  json doc;
  doc["n_a_axis"] = grid.n_a_axis();
  doc["n_b_axis"] = grid.n_b_axis();
  json pie = json::array(), ns = json::array(), log2m = json::array(), m = json::array(),
       conv = json::array(), errs = json::array();
  for (std::size_t i = 0; i < grid.n_a_axis().size(); ++i) {
    json pr = json::array(), nr = json::array(), lr = json::array(), mr = json::array(),
         cr = json::array(), er = json::array();
    for (std::size_t j = 0; j < grid.n_b_axis().size(); ++j) {
      const auto& c = grid.at(i, j);
      if (c.ok()) {
        pr.push_back(c.result.pie_star);
        nr.push_back(c.result.n_s_star);
        lr.push_back(std::log2(static_cast<double>(c.result.m_star)));
        mr.push_back(c.result.m_star);
        cr.push_back(c.result.converged);
        er.push_back(nullptr);
      } else {
        pr.push_back(nullptr);
        nr.push_back(nullptr);
        lr.push_back(nullptr);
        mr.push_back(nullptr);
        cr.push_back(false);
        er.push_back(c.error);
      }
    }
    pie.push_back(pr);
    ns.push_back(nr);
    log2m.push_back(lr);
    m.push_back(mr);
    conv.push_back(cr);
    errs.push_back(er);
  }
  doc["pie_bits_per_photon"] = pie;
  doc["n_s_star"] = ns;
  doc["log2_m_star"] = log2m;
  doc["m_star"] = m;
  doc["converged"] = conv;
  if (grid.failed_cells() > 0) doc["error"] = errs;
  return doc;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + path.string() + "'");
  file << text;
}

int cmd_sweep(const Context& ctx, const SweepArgs& a) {
  std::vector<double> n_a_axis;
  std::vector<double> n_b_axis;
  std::optional<std::uint64_t> m_cap = a.m_cap;
  if (!a.scenario.empty()) {
    const Scenario sc = load_scenario(a.scenario);
    n_a_axis = sc.sweep_n_a_axis;
    n_b_axis = sc.sweep_n_b_axis;
    if (!m_cap) m_cap = sc.m_cap;
  }
  if (!a.na_axis.empty()) n_a_axis = parse_list(a.na_axis, "--na-axis");
  if (!a.nb_axis.empty()) n_b_axis = parse_list(a.nb_axis, "--nb-axis");
  if (n_a_axis.empty()) n_a_axis = log_spaced_axis(a.na_min, a.na_max, a.points);
  if (n_b_axis.empty()) n_b_axis = log_spaced_axis(a.nb_min, a.nb_max, a.points);
  validate_axis(n_a_axis, "n_a axis");
  validate_axis(n_b_axis, "n_b axis");

  const fs::path dir = ctx.global.output.empty() ? fs::path(".") : fs::path(ctx.global.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory '" + dir.string() + "'");

  const SweepGrid grid = sweep(n_a_axis, n_b_axis, OptimizeOptions{m_cap});

  std::vector<fs::path> written;
  if (ctx.global.json) {
    written.push_back(dir / "sweep.json");
    write_file(written.back(), dump(sweep_json(grid)));
  } else {
    written.push_back(dir / "sweep.csv");
    write_file(written.back(), long_csv(grid));
    written.push_back(dir / "fig1a_pie_star.csv");
    write_file(written.back(), panel_csv(grid, 0, "pie_bits_per_photon"));
    written.push_back(dir / "fig1b_n_s_star.csv");
    write_file(written.back(), panel_csv(grid, 1, "n_s_star"));
    written.push_back(dir / "fig1c_log2_m_star.csv");
    write_file(written.back(), panel_csv(grid, 2, "log2_m_star"));
  }

  const std::size_t failed = grid.failed_cells();
  if (!ctx.global.quiet) {
    ctx.out << ctx.banner();
    ctx.out << "cells = " << grid.cells().size() << ", failed = " << failed << '\n';
    for (const auto& p : written) ctx.out << "wrote " << p.string() << '\n';
  }
  if (failed > 0) {
    ctx.err << "error: " << failed << " sweep cell(s) failed; see the error column\n";
    return kExitDomain;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- link

struct LinkArgs {
  std::string scenario;
  std::optional<double> n_b;
  std::optional<std::uint64_t> m_cap;
  std::string range_axis;
  bool fix_na = false;
};

json analysis_json(const LinkGeometry& g, const LinkAnalysis& a) {
  json doc{{"range_m", g.range_m},
           {"bandwidth_hz", g.bandwidth_hz},
           {"eta_ch", a.eta_ch},
           {"n_a", a.n_a},
           {"n_b", a.n_b},
           {"pie_bits_per_photon", a.pie_star},
           {"m_star", a.m_star},
           {"log2_m_star", std::log2(static_cast<double>(a.m_star))},
           {"n_s_star", a.n_s_star},
           {"converged", a.converged},
           {"t_s_star_s", a.t_s_star},
           {"slot_duration_s", a.slot_duration_s},
           {"rate_bps", a.rate_bps},
           {"background_counts_per_frame", a.background_counts_per_frame},
           {"coherent_pie_bits_per_photon", a.coherent_pie},
           {"coherent_rate_bps", a.coherent_rate_bps},
           {"near_field", a.near_field}};
  if (a.within_coherence_time) doc["within_coherence_time"] = *a.within_coherence_time;
  return doc;
}

std::string analysis_text(const LinkGeometry& g, const LinkAnalysis& a) {
  std::ostringstream s;
  s << "range = " << num(g.range_m) << " m, B = " << num(g.bandwidth_hz) << " Hz\n";
  s << "eta_ch = " << num(a.eta_ch) << '\n';
  s << "n_a = " << num(a.n_a) << " photons/slot, n_b = " << num(a.n_b) << " photons/slot\n";
  s << "PIE* = " << num(a.pie_star) << " bits/photon\n";
  s << "M* = " << a.m_star << " (log2 M* = " << num(std::log2(static_cast<double>(a.m_star)))
    << ")\n";
  s << "n_s* = " << num(a.n_s_star) << '\n';
  s << "t_s* = " << num(a.t_s_star) << " s, slot = " << num(a.slot_duration_s) << " s\n";
  s << "R = " << num(a.rate_bps) << " bit/s\n";
  s << "background counts per frame = " << num(a.background_counts_per_frame) << '\n';
  s << "coherent detection: PIE = " << num(a.coherent_pie) << " bits/photon, R = "
    << num(a.coherent_rate_bps) << " bit/s\n";
  if (a.within_coherence_time) {
    s << "t_s* within coherence time = " << (*a.within_coherence_time ? "true" : "false") << '\n';
  }
  return s.str();
}

int cmd_link(const Context& ctx, const LinkArgs& a) {
  const Scenario sc = load_scenario(a.scenario);
  const std::optional<double> n_b = a.n_b ? a.n_b : sc.n_b;
  if (!n_b) throw UsageError("link: n_b is required (scenario key 'n_b' or --nb)");
  LinkOptions options{a.m_cap ? a.m_cap : sc.m_cap, sc.coherence_time_s};
  const bool as_json = ctx.global.json || sc.output_format == OutputFormat::kJson;
  const bool as_csv = !ctx.global.json && sc.output_format == OutputFormat::kCsv;

  if (a.range_axis.empty()) {
    if (a.fix_na) throw UsageError("link: --fix-na needs --range-axis");
    const LinkAnalysis r = information_rate(sc.link, *n_b, options);
    if (r.near_field) ctx.warn("eta_ch > 1: near-field geometry, the diffraction formula does not apply");
    if (as_json) {
      ctx.emit(dump(analysis_json(sc.link, r)));
    } else if (as_csv) {
      const json doc = analysis_json(sc.link, r);
      std::ostringstream head, row;
      bool first = true;
      for (const auto& item : doc.items()) {
        head << (first ? "" : ",") << item.key();
        row << (first ? "" : ",");
        if (item.value().is_number_float()) {
          row << num(item.value().get<double>());
        } else {
          row << item.value().dump();
        }
        first = false;
      }
      ctx.emit(head.str() + '\n' + row.str() + '\n');
    } else {
      ctx.emit(ctx.banner() + analysis_text(sc.link, r));
    }
    return kExitOk;
  }

  const std::vector<double> ranges = parse_lengths(a.range_axis);
  const double n_a_ref = detected_signal_photons(sc.link);
  std::vector<std::pair<LinkGeometry, LinkAnalysis>> rows;
  for (double r : ranges) {
    if (a.fix_na) {
      BandwidthDesignOptions design{options, sc.bandwidth_cap_hz};
      auto d = design_variable_bandwidth(sc.link, n_a_ref, *n_b, r, design);
      rows.emplace_back(d.geometry, d.analysis);
    } else {
      LinkGeometry g = sc.link;
      g.range_m = r;
      rows.emplace_back(g, information_rate(g, *n_b, options));
    }
  }
  const double rate0 = rows.front().second.rate_bps;

  if (as_json) {
    json doc = json::array();
    for (const auto& [g, an] : rows) {
      json row = analysis_json(g, an);
      row["rate_ratio"] = an.rate_bps / rate0;
      doc.push_back(row);
    }
    ctx.emit(dump(doc));
    return kExitOk;
  }
  std::ostringstream s;
  if (!as_csv) s << ctx.banner();
  s << "range_m,bandwidth_hz,n_a,pie_bits_per_photon,m_star,n_s_star,t_s_star_s,rate_bps,rate_ratio\n";
  for (const auto& [g, an] : rows) {
    s << num(g.range_m) << ',' << num(g.bandwidth_hz) << ',' << num(an.n_a) << ','
      << num(an.pie_star) << ',' << an.m_star << ',' << num(an.n_s_star) << ','
      << num(an.t_s_star) << ',' << num(an.rate_bps) << ',' << num(an.rate_bps / rate0) << '\n';
  }
  ctx.emit(s.str());
  return kExitOk;
}

// -------------------------------------------------------------- certify

struct CertifyArgs {
  double n_s = 0.0;
  double n_b = 0.0;
  std::uint64_t m = 1;
};

int cmd_certify(const Context& ctx, const CertifyArgs& a) {
  const ChannelSpec spec = ChannelSpec::from_photons(a.n_s, a.n_b, a.m);
  const double exact = exact_mutual_information(spec);
  const bool bound_defined = a.n_s >= kMinSymbolPhotons;

  std::optional<BoundCertificate> cert;
  if (bound_defined) cert = certify_bound(a.n_s, a.n_b, a.m);
  const char* note = "bound undefined: the per-photon bound needs n_s > 0";

  if (ctx.global.json) {
    json doc{{"n_s", a.n_s}, {"n_b", a.n_b}, {"m", a.m}, {"exact_bits", exact}};
    if (cert) {
      doc["bound_bits"] = cert->bound;
      doc["margin_bits"] = cert->margin;
      doc["holds"] = cert->holds();
    } else {
      doc["bound_bits"] = nullptr;
      doc["margin_bits"] = nullptr;
      doc["note"] = note;
    }
    ctx.emit(dump(doc));
  } else {
    std::ostringstream s;
    s << ctx.banner();
    s << "n_s = " << num(a.n_s) << ", n_b = " << num(a.n_b) << ", M = " << a.m << '\n';
    s << "exact mutual information = " << num(exact) << " bits/symbol\n";
    if (cert) {
      s << "relative-entropy bound = " << num(cert->bound) << " bits/symbol\n";
      s << "margin = " << num(cert->margin) << " bits/symbol ("
        << (cert->holds() ? "bound holds" : "BOUND VIOLATED") << ")\n";
    } else {
      s << "note: " << note << '\n';
    }
    ctx.emit(s.str());
  }
  if (cert && !cert->holds()) {
    ctx.err << "error: bound exceeds exact mutual information by " << num(-cert->margin)
            << " bits\n";
    return kExitCertification;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon-information-efficiency limits of background-limited photon-counting links"};
  app.name(args.empty() ? "pielimits" : fs::path(args.front()).filename().string());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("pielimits ") + kVersion);

  GlobalOptions global;
  app.add_flag("--json", global.json, "Machine-readable JSON output");
  app.add_option("--output", global.output,
                 "Write results to this file (sweep: this directory)");
  app.add_flag("--quiet", global.quiet, "Suppress the banner, progress lines and warnings");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Relative-entropy PIE bound for one format");
  auto* ns_opt = bound_cmd->add_option("--ns", bound.n_s, "Symbol photon number n_s");
  auto* na_opt = bound_cmd->add_option("--na", bound.n_a, "Signal photons per slot n_a (n_s = M n_a)");
  ns_opt->excludes(na_opt);
  bound_cmd->add_option("--nb", bound.n_b, "Background photons per slot n_b")->required();
  bound_cmd->add_option("--m", bound.m, "Format order M")->required();

  OptimizeArgs optimize;
  auto* opt_cmd = app.add_subcommand("optimize", "Optimal format order M* at (n_a, n_b)");
  opt_cmd->add_option("--na", optimize.n_a, "Signal photons per slot n_a (> 0)")->required();
  opt_cmd->add_option("--nb", optimize.n_b, "Background photons per slot n_b")->required();
  opt_cmd->add_option("--m-cap", optimize.m_cap, "Largest admissible format order");
  opt_cmd->add_flag("--continuous", optimize.continuous, "Also report the real-valued optimum");

  LimitArgs limit;
  auto* limit_cmd = app.add_subcommand("limit", "PIE limit for vanishing signal (n_a -> 0)");
  limit_cmd->add_option("--nb", limit.n_b, "Background photons per slot n_b (> 0)")->required();
  auto* approx_flag = limit_cmd->add_flag("--approx", limit.approx, "Lambert-W approximation only");
  auto* both_flag = limit_cmd->add_flag("--both", limit.both, "Numerical limit, approximation and gap");
  approx_flag->excludes(both_flag);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Grid of optimisations over (n_a, n_b)");
  sweep_cmd->add_option("--scenario", sweep_args.scenario, "Scenario file with sweep axes");
  sweep_cmd->add_option("--na-axis", sweep_args.na_axis, "Comma-separated n_a values");
  sweep_cmd->add_option("--nb-axis", sweep_args.nb_axis, "Comma-separated n_b values");
  sweep_cmd->add_option("--na-min", sweep_args.na_min, "Default-axis lower n_a")->capture_default_str();
  sweep_cmd->add_option("--na-max", sweep_args.na_max, "Default-axis upper n_a")->capture_default_str();
  sweep_cmd->add_option("--nb-min", sweep_args.nb_min, "Default-axis lower n_b")->capture_default_str();
  sweep_cmd->add_option("--nb-max", sweep_args.nb_max, "Default-axis upper n_b")->capture_default_str();
  sweep_cmd->add_option("--points", sweep_args.points, "Points per default axis")->capture_default_str();
  sweep_cmd->add_option("--m-cap", sweep_args.m_cap, "Largest admissible format order");

  LinkArgs link;
  auto* link_cmd = app.add_subcommand("link", "Full link budget from a scenario file");
  link_cmd->add_option("--scenario", link.scenario, "Scenario JSON file")->required();
  link_cmd->add_option("--nb", link.n_b, "Override the scenario's n_b");
  link_cmd->add_option("--m-cap", link.m_cap, "Override the scenario's m_cap");
  link_cmd->add_option("--range-axis", link.range_axis, "Comma-separated ranges, e.g. 1AU,2AU,4AU");
  link_cmd->add_flag("--fix-na", link.fix_na, "Rescale bandwidth to hold n_a fixed over the ranges");

  CertifyArgs certify;
  auto* cert_cmd = app.add_subcommand("certify", "Compare the bound with exact mutual information");
  cert_cmd->add_option("--ns", certify.n_s, "Symbol photon number n_s")->required();
  cert_cmd->add_option("--nb", certify.n_b, "Background photons per slot n_b")->required();
  cert_cmd->add_option("--m", certify.m, "Format order M")->required();

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Context ctx{global, out, err};
  try {
    if (*bound_cmd) return cmd_bound(ctx, bound);
    if (*opt_cmd) return cmd_optimize(ctx, optimize);
    if (*limit_cmd) return cmd_limit(ctx, limit);
    if (*sweep_cmd) return cmd_sweep(ctx, sweep_args);
    if (*link_cmd) return cmd_link(ctx, link);
    if (*cert_cmd) return cmd_certify(ctx, certify);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "numeric domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pielimits::cli
