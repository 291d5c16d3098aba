#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace lieqrt {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::size_t column(const std::string& name) const;
};

inline constexpr int kSchemaVersion = 1;

struct ExperimentReport {
  std::string experiment;
  nlohmann::json config = nlohmann::json::object();
  /// Modelling choices that affect results (state and M distributions, N_g).
  nlohmann::json choices = nlohmann::json::object();
  Table table;
  /// One flag per row; the violation count is always derived from these.
  std::vector<bool> row_violation;
  nlohmann::json summary = nlohmann::json::object();
  double runtime_seconds = 0.0;

  std::size_t violations() const;
  bool has_nonfinite() const;
};

std::string format_cell(const Cell& c);

/// '#'-prefixed metadata lines, then an RFC-4180 header and rows.
/// Doubles are written with 17 significant digits.
void write_csv(std::ostream& os, const ExperimentReport& rep);

/// {"meta": {...}, "rows": [...]}; the wall-clock fields live in meta.run.
void write_json(std::ostream& os, const ExperimentReport& rep);

}  // namespace lieqrt
