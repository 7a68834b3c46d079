#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "run_config.hpp"
#include "stepwave/wavefield.hpp"

namespace stepwave::cli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Guard against a locale with ',' as the decimal separator.
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';
  return buf;
}

Table field_table(const FieldGrid& grid) {
  Table t{{"x", "t", "re_psi", "im_psi", "density", "stationary_density"}, {}};
  t.rows.reserve(grid.samples.size());
  for (const FieldSample& s : grid.samples) {
    const double stationary = std::norm(psi_stationary(s.x, grid.scenario));
    t.rows.push_back({s.x, s.t, s.psi.real(), s.psi.imag(), s.density, stationary});
  }
  return t;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out += (i ? "," : "") + table.columns[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += fmt(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      // JSON has no inf/nan; emit null for those.
      if (std::isfinite(row[i])) r[table.columns[i]] = row[i];
      else r[table.columns[i]] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::filesystem::path resolve_out_dir(const std::string& flag_value) {
  std::string dir = flag_value;
  if (dir.empty()) {
    const char* env = std::getenv("STEPWAVE_OUT_DIR");
    dir = env && *env ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  if (!std::filesystem::is_directory(dir)) throw IoError("output path is not a directory: " + dir);
  return dir;
}

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                 const std::string& content) {
  const std::filesystem::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("error while writing " + path.string());
  return path;
}

std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& table, const std::string& format) {
  if (format == "json") return write_file(dir, stem + ".json", to_json(table).dump(2) + "\n");
  return write_file(dir, stem + ".csv", to_csv(table));
}

std::filesystem::path write_json(const std::filesystem::path& dir, const std::string& name,
                                 const nlohmann::json& doc) {
  return write_file(dir, name, doc.dump(2) + "\n");
}

nlohmann::json scenario_json(const SourceScenario& s) {
  nlohmann::json j = {{"units", s.units().label}, {"hbar", s.hbar()},  {"mass", s.mass()},
                      {"V0", s.V0()},             {"E0", s.E0()},      {"regime", std::string(to_string(s.regime()))},
                      {"omega0", s.omega0()},     {"V", s.barrier_frequency()}};
  const double k = derive_wavenumber(s);
  j[s.regime() == Regime::above ? "k0" : "q0"] = k;
  j["group_velocity"] = group_velocity(s);
  if (s.regime() == Regime::below) j["x_p"] = penetration_length(s);
  return j;
}

}  // namespace stepwave::cli
