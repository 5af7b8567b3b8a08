#pragma once

// CSV contract: header row, 15 significant digits, comma separator, LF line
// endings. Byte-identical output for identical inputs.

#include <cstdio>
#include <string>
#include <vector>

namespace teplab {

inline std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) { append_row(header); }

  void append_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) body_ += ',';
      body_ += cells[i];
    }
    body_ += '\n';
  }

  void append_values(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_g15(v));
    append_row(cells);
  }

  const std::string& str() const { return body_; }

 private:
  std::string body_;
};

}  // namespace teplab
