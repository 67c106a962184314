#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace randpoly {

// shortest representation with up to 17 significant digits; round-trips exactly
inline std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_int(std::int64_t v) { return std::to_string(v); }
inline std::string csv_uint(std::uint64_t v) { return std::to_string(v); }

// in-memory table rendered as comma-separated text, one header row; cells are
// quoted only when they need it
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : width_(header.size()) {
    if (header.empty()) throw std::invalid_argument("CsvTable: empty header");
    append_row(header);
  }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::invalid_argument("CsvTable: row width");
    append_row(cells);
  }

  const std::string& text() const { return text_; }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("CsvTable: cannot open " + path);
    out << text_;
    if (!out) throw std::runtime_error("CsvTable: write failed for " + path);
  }

 private:
  static std::string escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }

  void append_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      text_ += escape(cells[i]);
    }
    text_ += '\n';
  }

  std::size_t width_;
  std::string text_;
};

}  // namespace randpoly
