#include <cmath>
#include <functional>
#include <string>

#include "commands.hpp"
#include "output.hpp"
#include "stepwave/error.hpp"
#include "stepwave/field_grid.hpp"
#include "stepwave/forerunner.hpp"
#include "stepwave/wavefield.hpp"

namespace stepwave::cli {

namespace {

using nlohmann::json;

constexpr int kSamples = 1201;

// Figure parameters are given in eV, nm and fs. With --units natural the
// scenario is rescaled to hbar = m = 1 with lengths in units of 1/wavenumber,
// and every coordinate goes through the same map.
struct Frame {
  SourceScenario scenario;
  double length_scale;  // target length per nm
  double time_scale;    // target time per fs

  double L(double nm) const { return nm * length_scale; }
  double T(double fs) const { return fs * time_scale; }
};

Frame make_frame(double V0_ev, double E0_ev, const std::string& units) {
  const SourceScenario given(UnitSystem::ev_nm_fs(), V0_ev, E0_ev);
  if (units == "ev-nm-fs") return {given, 1.0, 1.0};
  const double unit_nm = 1.0 / derive_wavenumber(given);
  const NaturalScales sc = natural_scales(given.units(), unit_nm);
  return {to_natural(given, unit_nm), 1.0 / unit_nm, 1.0 / sc.time};
}

struct Emitter {
  std::filesystem::path dir;
  std::string format;
  int figure;
  json curves = json::array();
  CommandResult result;

  void table(const std::string& name, const Table& t, json params, const std::string& description) {
    const std::string stem = "fig" + std::to_string(figure) + "_" + name;
    const auto path = write_table(dir, stem, t, format);
    result.files.push_back(path);
    curves.push_back({{"name", name},
                      {"file", path.filename().string()},
                      {"rows", t.rows.size()},
                      {"parameters", std::move(params)},
                      {"description", description}});
  }

  void field(const std::string& name, const FieldGrid& g, json params,
             const std::string& description) {
    table(name, field_table(g), std::move(params), description);
  }
};

std::string label(const char* prefix, double v) {
  std::string s = fmt(v);
  for (char& c : s)
    if (c == '.') c = 'p';
  return std::string(prefix) + s;
}

void figure1(Emitter& e, const Frame& f, json& extras) {
  const SourceScenario& s = f.scenario;
  const double v = group_velocity(s);
  json fronts = json::array();
  for (double t_fs : {15.0, 30.0}) {
    const double t = f.T(t_fs);
    e.field(label("space_t", t_fs), sample_space_cut(s, t, linspace(0.0, 1.5 * v * t, kSamples)),
            {{"t", t}, {"t_fs", t_fs}}, "space cut");
    fronts.push_back({{"t", t}, {"x_sc", v * t}});
  }
  for (double x_nm : {5.0, 30.0}) {
    const double x = f.L(x_nm);
    const double t_sc = x / v;
    e.field(label("time_x", x_nm), sample_time_cut(s, x, linspace(t_sc / 50.0, 3.0 * t_sc, kSamples)),
            {{"x", x}, {"x_nm", x_nm}}, "time cut");
    fronts.push_back({{"x", x}, {"t_sc", t_sc}});
  }
  extras["semiclassical_fronts"] = fronts;
}

void figure2(Emitter& e, const Frame& f, json&) {
  const SourceScenario& s = f.scenario;
  for (double x_nm : {1.2, 1.5})
    e.field(label("time_x", x_nm),
            sample_time_cut(s, f.L(x_nm), linspace(f.T(0.01), f.T(20.0), kSamples)),
            {{"x", f.L(x_nm)}, {"x_nm", x_nm}}, "time cut, fluctuation regime");
  for (double x_nm : {6.0, 10.0})
    e.field(label("time_x", x_nm),
            sample_time_cut(s, f.L(x_nm), linspace(f.T(0.1), f.T(80.0), kSamples)),
            {{"x", f.L(x_nm)}, {"x_nm", x_nm}}, "time cut, transient pulse regime");
}

void figure3(Emitter& e, const Frame& f, json& extras) {
  const SourceScenario& s = f.scenario;
  const double v = group_velocity(s);
  const double X0 = onset_bound(s);
  json markers = json::array();
  for (double t_fs : {1.0, 3.0, 4.0, 15.0}) {
    const double t = f.T(t_fs);
    const double x_hi = std::max(f.L(3.0), 2.0 * v * t);
    e.field(label("space_t", t_fs), sample_space_cut(s, t, linspace(0.0, x_hi, kSamples)),
            {{"t", t}, {"t_fs", t_fs}}, "space cut with stationary density");
    markers.push_back({{"t", t}, {"X_R", t > X0 / v ? json(crossover_position(t, s)) : json(nullptr)}});
  }
  extras["X0"] = X0;
  extras["X_R"] = markers;
}

void figure4(Emitter& e, const Frame& f, json& extras) {
  const SourceScenario& s = f.scenario;
  const double X0 = onset_bound(s);
  for (double t_fs : {1.0, 2.0, 3.0, 15.0})
    e.field(label("space_t", t_fs), sample_space_cut(s, f.T(t_fs), linspace(0.0, X0, kSamples)),
            {{"t", f.T(t_fs)}, {"t_fs", t_fs}},
            t_fs == 15.0 ? "late-time space cut" : "space cut on 0 < x < X0");
  extras["X0"] = X0;
}

void figure5(Emitter& e, const Frame& f, json& extras) {
  const SourceScenario& s = f.scenario;
  const double v = group_velocity(s);
  const double t0 = f.T(30.0);
  const std::vector<double> xs0 = linspace(0.0, 4.0 * v * t0, kSamples);
  for (double t_fs : {30.0, 100.0, 150.0, 300.0}) {
    const double t = f.T(t_fs);
    const double eta = t_fs / 30.0;
    const FieldGrid g = sample_space_cut(s, t, linspace(0.0, 4.0 * v * t, kSamples));
    e.field(label("space_t", t_fs), g, {{"t", t}, {"t_fs", t_fs}}, "space cut");
    if (t_fs == 30.0) continue;
    Table scaled{{"x_scaled", "eta", "density_scaled"}, {}};
    for (const FieldSample& p : g.samples) scaled.rows.push_back({p.x / eta, eta, eta * p.density});
    e.table(label("rescaled_eta", eta), scaled, {{"t", t}, {"eta", eta}},
            "rescaled overlay eta |psi|^2 vs x / eta");
  }
  std::vector<double> xs_pos(xs0.begin() + 1, xs0.end());
  e.field("pulse_t30", sample_space_cut(s, t0, xs_pos, FieldModel::pulse),
          {{"t", t0}, {"t_fs", 30.0}}, "closed-form pulse density at t0");
  json checks = json::array();
  for (double eta : {10.0 / 3.0, 5.0, 10.0}) {
    const ScalingCheck c = scaling_check(s, eta, t0, ScalingField::full_field);
    checks.push_back({{"eta", eta}, {"max_residual", c.max_residual},
                      {"support", {c.support.first, c.support.second}}});
  }
  extras["scaling_checks"] = checks;
  extras["etas"] = {10.0 / 3.0, 5.0, 10.0};
}

void figure6(Emitter& e, const Frame& f, json&) {
  const SourceScenario& s = f.scenario;
  const double v = group_velocity(s);
  const double x0 = f.L(8.0);
  const double t0 = f.T(30.0);
  const std::vector<double> ts = linspace(f.T(1.0), f.T(100.0), kSamples);
  const std::vector<double> xs = linspace(f.L(0.01), 4.0 * v * t0, kSamples);
  e.field("time_x8_exact", sample_time_cut(s, x0, ts), {{"x", x0}, {"x_nm", 8.0}},
          "exact density");
  e.field("time_x8_pulse", sample_time_cut(s, x0, ts, FieldModel::pulse), {{"x", x0}, {"x_nm", 8.0}},
          "transient pulse density");
  e.field("space_t30_exact", sample_space_cut(s, t0, xs), {{"t", t0}, {"t_fs", 30.0}},
          "exact density");
  e.field("space_t30_pulse", sample_space_cut(s, t0, xs, FieldModel::pulse),
          {{"t", t0}, {"t_fs", 30.0}}, "transient pulse density");
}

void figure7(Emitter& e, const Frame& f, json& extras) {
  const SourceScenario& s = f.scenario;
  const double v = group_velocity(s);
  const double t_m = f.T(30.0);
  const double t_prime = std::sqrt(3.0) * t_m;
  const double x_m = position_of_density_max(t_m, s, PulseMethod::closed_form);
  const double x_f = std::sqrt(3.0) * x_m;
  const std::vector<double> xs = linspace(f.L(0.01), 3.0 * v * t_prime, kSamples);
  e.field("pulse_t_m", sample_space_cut(s, t_m, xs, FieldModel::pulse), {{"t", t_m}},
          "pulse density at t_m");
  e.field("pulse_t_prime", sample_space_cut(s, t_prime, xs, FieldModel::pulse), {{"t", t_prime}},
          "pulse density at t' = sqrt(3) t_m");
  const PulseHeights h = pulse_heights(x_f, s);
  extras["t_m"] = t_m;
  extras["t_prime"] = t_prime;
  extras["x_m"] = x_m;
  extras["x_f"] = x_f;
  extras["x_f_over_x_m"] = x_f / x_m;
  extras["h_hc"] = h.h_hc;
  extras["h_fd"] = h.h_fd;
  extras["h_fd_at_t_prime"] = h.h_fd_at_t_prime;
  extras["height_ratio"] = h.ratio;
}

}  // namespace

CommandResult cmd_reproduce(const RunConfig& cfg) {
  const int figure = cfg.integer("figure", 0);
  if (figure < 1 || figure > 7) throw UsageError("reproduce needs --figure 1..7");
  if (cfg.has("V0") || cfg.has("E0") || cfg.has("mass"))
    throw UsageError("reproduce uses the figure's own scenario; V0, E0 and mass are fixed");
  const std::string units = cfg.choice("units", {"natural", "ev-nm-fs"}, "ev-nm-fs");
  const std::string format = cfg.choice("format", {"csv", "json"}, "csv");
  const Frame frame = make_frame(1.0, figure == 1 ? 2.0 : 0.5, units);

  Emitter e{resolve_out_dir(cfg.text("out", "")), format, figure, json::array(), {}};
  json extras = json::object();
  const std::function<void(Emitter&, const Frame&, json&)> builders[] = {
      figure1, figure2, figure3, figure4, figure5, figure6, figure7};
  builders[figure - 1](e, frame, extras);

  json manifest = {{"figure", figure},
                   {"scenario", scenario_json(frame.scenario)},
                   {"input_parameters", {{"V0_eV", 1.0}, {"E0_eV", figure == 1 ? 2.0 : 0.5}}},
                   {"length_per_nm", frame.length_scale},
                   {"time_per_fs", frame.time_scale},
                   {"curves", e.curves},
                   {"derived", extras}};
  if (figure == 3)
    manifest["consistency_note"] =
        "the quoted X0 = 2.134 is not reproduced; the free-electron mass with V0 = 1 eV, E0 = 0.5 eV gives "
        "X0 = 2/q0 = " + fmt(extras["X0"].get<double>()) + " in these units";
  if (figure == 7)
    manifest["consistency_note"] =
        "the quoted x_m = 48.639 nm and x_f = 84.246 nm are not reproduced; v t_m here gives x_m = " +
        fmt(extras["x_m"].get<double>()) + ", only the ratio x_f/x_m = sqrt(3) is unit free";
  e.result.files.push_back(write_json(e.dir, "fig" + std::to_string(figure) + "_manifest.json", manifest));
  return e.result;
}

}  // namespace stepwave::cli
