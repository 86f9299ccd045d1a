#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qwalk::io {

using Cell = std::variant<double, std::int64_t, std::string>;

enum class ColumnType { real, integer, text };

struct Column {
  std::string name;
  ColumnType type = ColumnType::real;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Rectangular table with a provenance block. Serialized as CSV preceded by a
/// single '#'-prefixed JSON line holding the metadata and column types; reals
/// use 17 significant digits so a read-back is lossless.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Column> columns);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Throws ParameterError if the row width or a cell type does not match.
  void add_row(std::vector<Cell> row);

  /// Index of the named column; throws ParameterError if missing.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> real_column(const std::string& name) const;

  /// Ordered string metadata (instance, command, version, timestamp, ...).
  void set_meta(const std::string& key, std::string value);
  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return meta_;
  }
  std::string meta(const std::string& key) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

std::string format_real(double x);
std::string to_csv(const Dataset& data);
Dataset parse_csv(const std::string& text);

/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& text);
void write_csv(const Dataset& data, const std::filesystem::path& path);
Dataset read_csv(const std::filesystem::path& path);

}  // namespace qwalk::io
