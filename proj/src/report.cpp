#include "lieqrt/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "lieqrt/error.hpp"

namespace lieqrt {

namespace {

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_cell(v);
        }
        return v;
      },
      c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  require(row.size() == columns.size(), ErrorKind::DimensionMismatch,
          "Table::add_row: row width differs from header");
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw Error(ErrorKind::InvalidInput, "unknown column " + name);
}

std::size_t ExperimentReport::violations() const {
  std::size_t n = 0;
  for (bool v : row_violation) n += v ? 1 : 0;
  return n;
}

bool ExperimentReport::has_nonfinite() const {
  for (const auto& row : table.rows)
    for (const auto& c : row)
      if (const double* d = std::get_if<double>(&c); d && !std::isfinite(*d)) return true;
  return false;
}

std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const double d = std::get<double>(c);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

void write_csv(std::ostream& os, const ExperimentReport& rep) {
  os << "# schema_version=" << kSchemaVersion << '\n';
  os << "# experiment=" << rep.experiment << '\n';
  os << "# config=" << rep.config.dump() << '\n';
  os << "# choices=" << rep.choices.dump() << '\n';
  for (std::size_t i = 0; i < rep.table.columns.size(); ++i)
    os << (i ? "," : "") << quote_csv(rep.table.columns[i]);
  os << "\r\n";
  for (const auto& row : rep.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << quote_csv(format_cell(row[i]));
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const ExperimentReport& rep) {
  nlohmann::json meta;
  meta["schema_version"] = std::to_string(kSchemaVersion);
  meta["experiment"] = rep.experiment;
  meta["config"] = rep.config;
  meta["choices"] = rep.choices;
  meta["columns"] = rep.table.columns;
  meta["summary"] = rep.summary;
  meta["violations"] = rep.violations();
  meta["run"] = {{"timestamp", utc_timestamp()}, {"runtime_seconds", rep.runtime_seconds}};

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[rep.table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  nlohmann::json doc = {{"meta", std::move(meta)}, {"rows", std::move(rows)}};
  os << doc.dump(2) << '\n';
}

}  // namespace lieqrt
