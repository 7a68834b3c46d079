#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "output.hpp"
#include "stepwave/error.hpp"
#include "stepwave/field_grid.hpp"
#include "stepwave/forerunner.hpp"
#include "stepwave/oracle.hpp"
#include "stepwave/wavefield.hpp"

namespace stepwave::cli {

namespace {

using nlohmann::json;

std::string output_format(const RunConfig& cfg) {
  return cfg.choice("format", {"csv", "json"}, "csv");
}

FieldModel field_model(const RunConfig& cfg) {
  const std::string m = cfg.choice("model", {"exact", "decomposed", "pulse"}, "exact");
  if (m == "decomposed") return FieldModel::decomposed;
  if (m == "pulse") return FieldModel::pulse;
  return FieldModel::exact;
}

std::vector<double> axis_values(const RunConfig& cfg, const std::string& lo_key,
                                const std::string& hi_key, const std::string& n_key,
                                double lo_default, double hi_default, int n_default) {
  const double lo = cfg.number(lo_key, lo_default);
  const double hi = cfg.number(hi_key, hi_default);
  const int n = cfg.integer(n_key, n_default);
  if (n < 2) throw UsageError("config key '" + n_key + "' must be >= 2");
  if (!(hi > lo)) throw UsageError(lo_key + " must be smaller than " + hi_key);
  if (cfg.choice("spacing", {"linear", "log"}, "linear") == "log") {
    if (!(lo > 0.0)) throw UsageError("log spacing needs " + lo_key + " > 0");
    return logspace(lo, hi, n);
  }
  return linspace(lo, hi, n);
}

// Semiclassical reference points that go next to a field cut.
json fronts_json(const SourceScenario& s, CutAxis axis, double fixed) {
  json j = json::object();
  const double v = group_velocity(s);
  if (s.regime() == Regime::above) {
    if (axis == CutAxis::space_cut_at_fixed_t) j["x_sc"] = v * fixed;
    else j["t_sc"] = fixed / v;
    return j;
  }
  const double X0 = onset_bound(s);
  j["X0"] = X0;
  j["x_p"] = penetration_length(s);
  if (axis == CutAxis::space_cut_at_fixed_t) {
    j["x_m"] = position_of_density_max(fixed, s, PulseMethod::closed_form);
    j["X_R"] = fixed > X0 / v ? json(crossover_position(fixed, s)) : json(nullptr);
  } else if (fixed > 0.0) {
    j["tau"] = traversal_time(s, fixed);
    j["t_m"] = time_of_density_max(fixed, s, PulseMethod::closed_form);
  }
  return j;
}

const char* axis_name(CutAxis a) {
  return a == CutAxis::space_cut_at_fixed_t ? "space_cut_at_fixed_t" : "time_cut_at_fixed_x";
}

}  // namespace

CommandResult cmd_field(const RunConfig& cfg) {
  const SourceScenario s = cfg.scenario();
  const std::string format = output_format(cfg);
  const FieldModel model = field_model(cfg);
  const std::string stem = cfg.text("name", "field");
  const double v = group_velocity(s);
  const double k = derive_wavenumber(s);

  FieldGrid grid = [&] {
    if (cfg.choice("axis", {"space", "time"}, "space") == "space") {
      const double t = cfg.positive("t", 20.0 / (k * v));
      const double x_hi = std::max(4.0 * v * t, 20.0 / k);
      const double x_lo = model == FieldModel::exact ? 0.0 : 1e-3 / k;
      return sample_space_cut(s, t, axis_values(cfg, "x_min", "x_max", "nx", x_lo, x_hi, 401), model);
    }
    const double x = cfg.number("x", 10.0 / k);
    if (!(x >= 0.0)) throw UsageError("config key 'x' must be >= 0");
    const double t_hi = 5.0 * std::max(x, 2.0 / k) / v;
    return sample_time_cut(s, x, axis_values(cfg, "t_min", "t_max", "nt", 1e-3 * t_hi, t_hi, 401), model);
  }();

  const auto dir = resolve_out_dir(cfg.text("out", ""));
  CommandResult r;
  r.files.push_back(write_table(dir, stem, field_table(grid), format));
  const json sidecar = {{"scenario", scenario_json(s)},
                        {"axis", axis_name(grid.axis)},
                        {"fixed_value", grid.fixed_value},
                        {"model", cfg.text("model", "exact")},
                        {"samples", grid.samples.size()},
                        {"fronts", fronts_json(s, grid.axis, grid.fixed_value)}};
  r.files.push_back(write_json(dir, stem + "_fronts.json", sidecar));
  return r;
}

CommandResult cmd_forerunner(const RunConfig& cfg) {
  const SourceScenario s = cfg.scenario();
  if (s.regime() != Regime::below)
    throw RegimeError("forerunner analysis needs E0 < V0 (below-step scenario)");
  if (cfg.has("format") && output_format(cfg) != "json")
    throw UsageError("forerunner writes a JSON report only");
  const double xp = penetration_length(s);
  const double v = group_velocity(s);
  const double T = xp / v;
  const double X0 = onset_bound(s);
  const double x_f = cfg.positive("x_f", 20.0 * xp);
  const double t_f = cfg.positive("t_f", 20.0 * T);
  const double t0 = cfg.positive("t0", 45.0 * T);
  const std::vector<double> xr_times =
      cfg.numbers("xr_times", {2.5 * X0 / v, 5.0 * X0 / v, 10.0 * X0 / v, 20.0 * X0 / v});
  const std::vector<double> etas = cfg.numbers("etas", {1.0, 3.333, 5.0, 10.0});

  CommandResult r;
  const auto method_block = [&](PulseMethod m) {
    json j = {{"method", std::string(to_string(m))}};
    try {
      const ForerunnerReport rep = make_report(s, x_f, t_f, xr_times, m);
      json xr = json::array();
      for (const auto& [t, x] : rep.XR_at) xr.push_back({{"t", t}, {"X_R", x}});
      j["XR_at"] = xr;
      j["t_m"] = rep.t_m;
      j["x_m"] = rep.x_m;
      j["h_hc"] = rep.heights.h_hc;
      j["h_fd"] = rep.heights.h_fd;
      j["h_fd_at_t_prime"] = rep.heights.h_fd_at_t_prime;
      j["height_ratio"] = rep.heights.ratio;
      j["x_m_at_t_m"] = rep.heights.x_m;
    } catch (const NumericalError& e) {
      j["error"] = e.what();
      r.exit_code = exit_physics;
    }
    return j;
  };

  json doc = {{"scenario", scenario_json(s)}, {"X0", X0},   {"x_p", xp},
              {"x_f", x_f},                   {"t_f", t_f}, {"tau", traversal_time(s, x_f)}};
  const json analytic = method_block(PulseMethod::closed_form);
  const json numeric = method_block(PulseMethod::full_field);
  doc["analytic"] = analytic;
  doc["numeric"] = numeric;
  doc["height_ratio"] = analytic["height_ratio"];
  doc["x_f_over_x_m"] = x_f / analytic["x_m_at_t_m"].get<double>();

  json disc = json::object();
  if (!numeric.contains("error"))
    for (const char* key : {"t_m", "x_m", "height_ratio"}) {
      const double a = analytic[key].get<double>();
      disc[key] = std::abs(numeric[key].get<double>() - a) / std::abs(a);
    }
  doc["relative_discrepancy"] = disc;

  json scaling = json::array();
  for (double eta : etas)
    for (ScalingField f : {ScalingField::pulse_only, ScalingField::full_field}) {
      const ScalingCheck c = scaling_check(s, eta, t0, f);
      scaling.push_back({{"eta", eta},
                         {"field", f == ScalingField::pulse_only ? "pulse_only" : "full_field"},
                         {"t0", t0},
                         {"max_residual", c.max_residual},
                         {"support", {c.support.first, c.support.second}}});
    }
  doc["scaling"] = scaling;

  const auto dir = resolve_out_dir(cfg.text("out", ""));
  r.files.push_back(write_json(dir, "forerunner.json", doc));
  return r;
}

CommandResult cmd_oracle(const RunConfig& cfg) {
  const SourceScenario s = cfg.scenario();
  const std::string format = output_format(cfg);
  GridSpec g;
  g.length = cfg.positive("L", 10.0);
  g.nx = cfg.integer("grid_nx", 2047);
  g.dt = cfg.positive("dt", 0.005);
  g.n_steps = cfg.integer("n_steps", 400);
  CnOptions opt;
  opt.boundary = cfg.choice("boundary", {"transparent", "hard_wall"}, "transparent") == "hard_wall"
                     ? FarBoundary::hard_wall
                     : FarBoundary::transparent;
  opt.startup_steps = cfg.integer("startup_steps", 2);
  opt.source_amplitude = cfg.number("source_amplitude", 1.0);
  TalbotOptions topt;
  topt.nodes = cfg.integer("talbot_nodes", 64);
  const int probes = cfg.integer("probes", 11);
  if (probes < 2) throw UsageError("config key 'probes' must be >= 2");
  const double tol_cn = cfg.positive("tol_cn", 1e-3);
  const double tol_talbot = cfg.positive("tol_talbot", 1e-6);

  const auto dir = resolve_out_dir(cfg.text("out", ""));
  const CNState final_state = cn_evolve(s, g, opt).back();
  const double T = final_state.t;
  const double amp2 = opt.source_amplitude * opt.source_amplitude;

  const auto rel = [](double num, double ref) {
    return ref > 0.0 ? std::abs(num - ref) / ref : std::abs(num);
  };
  Table table{{"x", "t", "analytic_density", "cn_density", "talbot_density", "rel_err_cn",
               "rel_err_talbot"},
              {}};
  Table violations{table.columns, {}};
  const int last = (g.nx - 1) / 2;
  for (int k = 0; k < probes; ++k) {
    const int i = static_cast<int>(std::lround(static_cast<double>(k) * last / (probes - 1)));
    const double x = i * g.dx();
    const double analytic = amp2 * std::norm(psi_exact(x, T, s));
    const double cn = std::norm(final_state.psi[i]);
    const double talbot = amp2 * std::norm(talbot_invert(x, T, s, topt));
    std::vector<double> row = {x, T, analytic, cn, talbot, rel(cn, analytic), rel(talbot, analytic)};
    if (row[5] > tol_cn || row[6] > tol_talbot) violations.rows.push_back(row);
    table.rows.push_back(std::move(row));
  }

  CommandResult r;
  r.files.push_back(write_table(dir, "oracle", table, format));
  json summary = {{"scenario", scenario_json(s)},
                  {"grid", {{"L", g.length}, {"nx", g.nx}, {"dt", g.dt}, {"n_steps", g.n_steps}}},
                  {"boundary", cfg.text("boundary", "transparent")},
                  {"talbot_nodes", topt.nodes},
                  {"tol_cn", tol_cn},
                  {"tol_talbot", tol_talbot},
                  {"violations", violations.rows.size()}};
  if (amp2 > 0.0) {
    summary["cn_relative_l2_error"] = cn_relative_l2_error(s, g, final_state);
  }
  if (!violations.rows.empty()) {
    r.files.push_back(write_table(dir, "oracle_violations", violations, format));
    r.exit_code = exit_physics;
    std::cerr << "oracle: " << violations.rows.size() << " probe(s) outside tolerance\n";
  }
  r.files.push_back(write_json(dir, "oracle_summary.json", summary));
  return r;
}

CommandResult run_command(const RunConfig& cfg) {
  try {
    if (cfg.command() == "field") return cmd_field(cfg);
    if (cfg.command() == "forerunner") return cmd_forerunner(cfg);
    if (cfg.command() == "oracle") return cmd_oracle(cfg);
    if (cfg.command() == "reproduce") return cmd_reproduce(cfg);
    throw UsageError("unknown command '" + cfg.command() + "'");
  } catch (const UsageError& e) {
    std::cerr << "stepwave " << cfg.command() << ": " << e.what() << "\n";
    return {exit_usage, {}};
  } catch (const IoError& e) {
    std::cerr << "stepwave " << cfg.command() << ": " << e.what() << "\n";
    return {exit_io, {}};
  } catch (const PreflightError& e) {
    std::cerr << "stepwave " << cfg.command() << ": preflight failed: " << e.what() << "\n";
    return {exit_physics, {}};
  } catch (const NumericalError& e) {
    std::cerr << "stepwave " << cfg.command() << ": " << e.what() << "\n";
    return {exit_physics, {}};
  } catch (const ContourError& e) {
    std::cerr << "stepwave " << cfg.command() << ": " << e.what() << "\n";
    return {exit_physics, {}};
  } catch (const Error& e) {
    std::cerr << "stepwave " << cfg.command() << ": " << e.what() << "\n";
    return {exit_usage, {}};
  }
}

}  // namespace stepwave::cli
