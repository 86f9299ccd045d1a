#include "qwalk/dataset.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::io {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view type_name(ColumnType t) {
  switch (t) {
    case ColumnType::real:
      return "real";
    case ColumnType::integer:
      return "integer";
    case ColumnType::text:
      return "text";
  }
  return "real";
}

ColumnType parse_type(const std::string& s) {
  if (s == "real") return ColumnType::real;
  if (s == "integer") return ColumnType::integer;
  if (s == "text") return ColumnType::text;
  throw ParameterError("unknown column type '" + s + "'");
}

bool matches(const Cell& cell, ColumnType t) {
  switch (t) {
    case ColumnType::real:
      return std::holds_alternative<double>(cell);
    case ColumnType::integer:
      return std::holds_alternative<std::int64_t>(cell);
    case ColumnType::text:
      return std::holds_alternative<std::string>(cell);
  }
  return false;
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Cell parse_cell(const std::string& text, ColumnType t) {
  switch (t) {
    case ColumnType::text:
      return text;
    case ColumnType::integer: {
      errno = 0;
      char* end = nullptr;
      const long long v = std::strtoll(text.c_str(), &end, 10);
      if (errno != 0 || end == text.c_str() || *end != '\0') {
        throw ParameterError("malformed integer cell '" + text + "'");
      }
      return static_cast<std::int64_t>(v);
    }
    case ColumnType::real: {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (end == text.c_str() || *end != '\0') {
        throw ParameterError("malformed real cell '" + text + "'");
      }
      return v;
    }
  }
  return text;
}

}  // namespace

Dataset::Dataset(std::vector<Column> columns) : columns_(std::move(columns)) {}

void Dataset::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw ParameterError("row has " + std::to_string(row.size()) +
                         " cells, dataset has " +
                         std::to_string(columns_.size()) + " columns");
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!matches(row[i], columns_[i].type)) {
      throw ParameterError("cell type does not match column '" +
                           columns_[i].name + "'");
    }
  }
  rows_.push_back(std::move(row));
}

std::size_t Dataset::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  throw ParameterError("no column named '" + name + "'");
}

std::vector<double> Dataset::real_column(const std::string& name) const {
  const auto idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    if (const auto* x = std::get_if<double>(&row[idx])) {
      out.push_back(*x);
    } else if (const auto* n = std::get_if<std::int64_t>(&row[idx])) {
      out.push_back(static_cast<double>(*n));
    } else {
      throw ParameterError("column '" + name + "' is not numeric");
    }
  }
  return out;
}

void Dataset::set_meta(const std::string& key, std::string value) {
  for (auto& [k, v] : meta_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta_.emplace_back(key, std::move(value));
}

std::string Dataset::meta(const std::string& key) const {
  for (const auto& [k, v] : meta_) {
    if (k == key) return v;
  }
  return {};
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Dataset& data) {
  ordered_json header;
  header["meta"] = ordered_json::object();
  for (const auto& [k, v] : data.metadata()) header["meta"][k] = v;
  header["columns"] = ordered_json::array();
  for (const auto& c : data.columns()) {
    header["columns"].push_back({{"name", c.name}, {"type", type_name(c.type)}});
  }

  std::ostringstream out;
  out << "# " << header.dump() << '\n';
  for (std::size_t i = 0; i < data.columns().size(); ++i) {
    if (i) out << ',';
    out << quote_if_needed(data.columns()[i].name);
  }
  out << '\n';
  for (const auto& row : data.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_real(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              out << v;
            } else {
              out << quote_if_needed(v);
            }
          },
          row[i]);
    }
    out << '\n';
  }
  return out.str();
}

Dataset parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw ParameterError("dataset is missing its '# {...}' metadata line");
  }
  ordered_json header;
  try {
    header = ordered_json::parse(line.substr(2));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed dataset metadata: ") + e.what());
  }

  std::vector<Column> columns;
  for (const auto& c : header.at("columns")) {
    columns.push_back({c.at("name").get<std::string>(),
                       parse_type(c.at("type").get<std::string>())});
  }
  Dataset data(columns);
  for (const auto& [k, v] : header.at("meta").items()) {
    data.set_meta(k, v.get<std::string>());
  }

  if (!std::getline(in, line)) throw ParameterError("dataset has no header row");
  if (split_csv_line(line).size() != columns.size()) {
    throw ParameterError("header row does not match the column list");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != columns.size()) {
      throw ParameterError("ragged dataset row");
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      row.push_back(parse_cell(fields[i], columns[i].type));
    }
    data.add_row(std::move(row));
  }
  return data;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
  write_atomic(path, to_csv(data));
}

Dataset read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace qwalk::io
