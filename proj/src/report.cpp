#include "convoscale/report.hpp"

#include <cmath>

#include <fmt/format.h>

#include "convoscale/errors.hpp"

namespace convoscale::report {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string num(double value) {
  if (std::isnan(value)) return "";
  return fmt::format("{}", value);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns,
                     const std::string& config_hash)
    : out_(open_for_write(path)), width_(columns.size()) {
  out_ << "# config_sha256: " << config_hash << '\n';
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) {
    throw Error("CSV row has " + std::to_string(fields.size()) + " fields, expected " + std::to_string(width_));
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << csv_field(fields[i]);
  }
  out_ << '\n';
}

const std::vector<std::string>& fit_columns() {
  static const std::vector<std::string> columns = {"unit",       "corpus",  "exponent",  "ses",      "ses_flag",
                                                   "r2",         "n_points", "regime_lo", "regime_hi"};
  return columns;
}

std::vector<std::string> fit_row(const std::string& unit, const std::string& corpus, const FitResult& fit) {
  return {unit,
          corpus,
          num(fit.exponent),
          num(fit.ses),
          ses_flag(fit.ses),
          num(fit.r2),
          std::to_string(fit.n_points),
          num(fit.regime.lo),
          num(fit.regime.hi)};
}

void write_points(const std::filesystem::path& path, std::span<const Point> points, const std::string& x_label,
                  const std::string& y_label, const std::string& config_hash) {
  auto out = open_for_write(path);
  out << "# config_sha256: " << config_hash << '\n';
  out << "# " << x_label << ' ' << y_label << '\n';
  for (const auto& p : points) out << num(p.x) << ' ' << num(p.y) << '\n';
}

Histogram log10_histogram(std::span<const std::size_t> values, double bin_width) {
  if (!(bin_width > 0.0)) throw InvalidArgument("histogram bin width must be positive");
  Histogram h;
  h.bin_width = bin_width;
  for (auto v : values) {
    if (v == 0) throw InvalidArgument("log10 histogram needs positive values");
    // Nudge so exact decades (log10 10 = 1) land in the bin they open.
    const auto bin = static_cast<long>(std::floor(std::log10(static_cast<double>(v)) / bin_width + 1e-9));
    ++h.counts[bin];
  }
  return h;
}

void write_histogram(const std::filesystem::path& path, const Histogram& histogram, const std::string& config_hash) {
  auto out = open_for_write(path);
  out << "# config_sha256: " << config_hash << '\n';
  out << "# log10_lo log10_hi count\n";
  for (const auto& [bin, count] : histogram.counts) {
    out << fmt::format("{:.10g} {:.10g} {}\n", static_cast<double>(bin) * histogram.bin_width,
                       static_cast<double>(bin + 1) * histogram.bin_width, count);
  }
}

}  // namespace convoscale::report
