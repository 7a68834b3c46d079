#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "stepwave/field_grid.hpp"

namespace stepwave::cli {

/// %.17g with '.' as the decimal separator.
std::string fmt(double v);

/// Plain numeric table; written as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// x,t,re_psi,im_psi,density,stationary_density for every sample.
Table field_table(const FieldGrid& grid);

std::string to_csv(const Table& table);
nlohmann::json to_json(const Table& table);

/// Directory from --out, else $STEPWAVE_OUT_DIR, else ".". Created if missing.
std::filesystem::path resolve_out_dir(const std::string& flag_value);

/// Writes `content` to dir/name and returns the path. Throws IoError.
std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                 const std::string& content);

/// Writes the table as <stem>.csv or <stem>.json depending on `format`.
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& table, const std::string& format);

std::filesystem::path write_json(const std::filesystem::path& dir, const std::string& name,
                                 const nlohmann::json& doc);

nlohmann::json scenario_json(const SourceScenario& s);

}  // namespace stepwave::cli
