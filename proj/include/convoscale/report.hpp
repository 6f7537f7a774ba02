#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "convoscale/scaling.hpp"

namespace convoscale::report {

/// Shortest round-trip decimal form; "" for NaN.
std::string num(double value);

/// CSV with a leading "# config_sha256: <hash>" comment line, then the header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns,
            const std::string& config_hash);

  void row(const std::vector<std::string>& fields);

 private:
  std::ofstream out_;
  std::size_t width_;
};

/// Column order of every fit report row.
const std::vector<std::string>& fit_columns();

std::vector<std::string> fit_row(const std::string& unit, const std::string& corpus, const FitResult& fit);

/// Two-column whitespace-separated data file ("# x y" header).
void write_points(const std::filesystem::path& path, std::span<const Point> points,
                  const std::string& x_label, const std::string& y_label, const std::string& config_hash);

/// Counts per log10 bin: bin k covers [k * width, (k + 1) * width).
struct Histogram {
  double bin_width = 0.1;
  std::map<long, std::size_t> counts;
};

Histogram log10_histogram(std::span<const std::size_t> values, double bin_width = 0.1);

/// Rows "bin_lo bin_hi count".
void write_histogram(const std::filesystem::path& path, const Histogram& histogram,
                     const std::string& config_hash);

}  // namespace convoscale::report
