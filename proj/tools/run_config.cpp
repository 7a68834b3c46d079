#include "run_config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace stepwave::cli {

namespace {

const std::vector<KeySpec> kCommon = {
    {"units", "unit system: natural or ev-nm-fs"},
    {"V0", "step height (energy)"},
    {"E0", "source energy (energy)"},
    {"mass", "particle mass; defaults to the unit system's"},
    {"out", "output directory"},
    {"format", "csv or json"},
};

const std::map<std::string, std::vector<KeySpec>> kCommandKeys = {
    {"field",
     {{"axis", "space (cut at fixed t) or time (cut at fixed x)"},
      {"t", "fixed time of a space cut"},
      {"x", "fixed position of a time cut"},
      {"x_min", "first position"},
      {"x_max", "last position"},
      {"nx", "number of positions (>= 2)"},
      {"t_min", "first time"},
      {"t_max", "last time"},
      {"nt", "number of times (>= 2)"},
      {"spacing", "linear or log"},
      {"model", "exact, decomposed or pulse"},
      {"name", "output file stem"}}},
    {"forerunner",
     {{"x_f", "probe position for t_m and the heights"},
      {"t_f", "probe time for x_m"},
      {"xr_times", "comma-separated times for X_R"},
      {"t0", "reference time of the scaling checks"},
      {"etas", "comma-separated scaling factors"}}},
    {"oracle",
     {{"L", "domain length"},
      {"grid_nx", "grid nodes (>= 64)"},
      {"dt", "time step"},
      {"n_steps", "number of steps"},
      {"boundary", "transparent or hard_wall"},
      {"startup_steps", "implicit-Euler start-up steps"},
      {"source_amplitude", "source amplitude"},
      {"talbot_nodes", "Talbot contour nodes"},
      {"probes", "number of probe positions on [0, L/2]"},
      {"tol_cn", "relative tolerance of the Crank-Nicolson column"},
      {"tol_talbot", "relative tolerance of the Talbot column"}}},
    {"reproduce", {{"figure", "figure number 1..7"}}},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw UsageError("config key '" + key + "': '" + text + "' is not a finite number");
  return v;
}

}  // namespace

std::vector<KeySpec> keys_for(const std::string& command) {
  const auto it = kCommandKeys.find(command);
  if (it == kCommandKeys.end()) throw UsageError("unknown command '" + command + "'");
  std::vector<KeySpec> out = kCommon;
  out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

void check_keys(const std::map<std::string, std::string>& values, const std::string& command) {
  const std::vector<KeySpec> allowed = keys_for(command);
  for (const auto& [key, value] : values) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const KeySpec& k) { return k.name == key; });
    if (!known) throw UsageError("unknown config key '" + key + "' for command " + command);
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path,
                                                    const std::string& command) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError(path + ":" + std::to_string(lineno) + ": empty key or value");
    if (values.count(key))
      throw UsageError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    values[key] = value;
  }
  if (in.bad()) throw IoError("error while reading config file " + path);
  check_keys(values, command);
  return values;
}

RunConfig::RunConfig(std::string command, std::map<std::string, std::string> values)
    : command_(std::move(command)), values_(std::move(values)) {
  check_keys(values_, command_);
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double RunConfig::number(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing required config key '" + key + "'");
  return parse_double(key, it->second);
}

double RunConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

double RunConfig::positive(const std::string& key, double fallback) const {
  const double v = number(key, fallback);
  if (!(v > 0.0)) throw UsageError("config key '" + key + "' must be > 0");
  return v;
}

int RunConfig::integer(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const std::string& s = values_.at(key);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || pos == 0 || v < -2147483647L || v > 2147483647L)
    throw UsageError("config key '" + key + "': '" + s + "' is not an integer");
  return static_cast<int>(v);
}

std::vector<double> RunConfig::numbers(const std::string& key,
                                       const std::vector<double>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<double> out;
  std::stringstream ss(values_.at(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw UsageError("config key '" + key + "' needs at least one value");
  return out;
}

std::string RunConfig::choice(const std::string& key, const std::vector<std::string>& choices,
                              const std::string& fallback) const {
  const std::string v = text(key, fallback);
  if (std::find(choices.begin(), choices.end(), v) == choices.end()) {
    std::string list;
    for (const auto& c : choices) list += (list.empty() ? "" : ", ") + c;
    throw UsageError("config key '" + key + "' must be one of: " + list);
  }
  return v;
}

UnitSystem RunConfig::unit_system() const {
  UnitSystem u = UnitSystem::from_label(choice("units", {"natural", "ev-nm-fs"}, "natural"));
  if (has("mass")) u = u.with_mass(positive("mass", 1.0));
  return u;
}

SourceScenario RunConfig::scenario() const {
  return SourceScenario(unit_system(), number("V0", 1.0), number("E0", 0.5));
}

}  // namespace stepwave::cli
