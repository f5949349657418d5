#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// CSV/JSON emission helpers for the CLI.  Numbers are rendered with 12
// significant digits; CSV is comma-separated, UTF-8, LF line endings, one
// header row.

namespace hydrocomp::cli {

inline std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

// Re-rounds a double to the 12-significant-digit value the CSV shows, so the
// JSON output mirrors the CSV fields exactly.
inline double csv_rounded(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

class Table {
 public:
  explicit Table(std::vector<std::string> header)
      : header_(std::move(header)) {}

  class RowBuilder {
   public:
    explicit RowBuilder(std::vector<std::string>* row) : row_(row) {}
    RowBuilder& add(const std::string& v) {
      row_->push_back(v);
      return *this;
    }
    RowBuilder& add(double v) { return add(format_number(v)); }
    RowBuilder& add(int v) { return add(std::to_string(v)); }

   private:
    std::vector<std::string>* row_;
  };

  RowBuilder row() {
    rows_.emplace_back();
    rows_.back().reserve(header_.size());
    return RowBuilder(&rows_.back());
  }

  void set_row(std::size_t index, std::vector<std::string> row) {
    if (rows_.size() <= index) rows_.resize(index + 1);
    rows_[index] = std::move(row);
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write_csv(std::ostream& os) const {
    write_line(os, header_);
    for (const auto& r : rows_) write_line(os, r);
  }

 private:
  static void write_line(std::ostream& os, const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Opens `path` for writing, or returns std::cout when path is empty.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace hydrocomp::cli
