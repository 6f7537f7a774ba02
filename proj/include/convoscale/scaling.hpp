#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convoscale/corpus.hpp"

namespace convoscale {

/// Unique-type counts N(t) for t = 1..T; `unique[t - 1]` holds N(t).
/// Values are real so that cross-conversation averages fit the same type.
struct GrowthCurve {
  std::vector<double> unique;

  std::size_t size() const noexcept { return unique.size(); }
};

/// N(t) = number of distinct forms among the first t tokens. Throws on empty input.
GrowthCurve growth_curve(std::span<const std::string> forms);

/// Mean of N_c(t) over the conversations still running at t (length >= t).
/// With a macro-class unit each conversation is first reduced to its tokens of
/// that class, positions re-indexed within the reduced stream.
GrowthCurve averaged_growth_curve(const Corpus& corpus, const AnalysisUnit& unit);

struct RankEntry {
  std::size_t rank = 0;
  std::string type;
  std::size_t count = 0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

using RankTable = std::vector<RankEntry>;

/// Types by descending count; ties by first occurrence, then lexicographically.
RankTable rank_frequency(std::span<const std::string> forms);

/// Counts aggregated over every conversation of the corpus (in conversation order).
RankTable rank_frequency(const Corpus& corpus, const AnalysisUnit& unit);

enum class Axis { X, Y };

/// Half-open interval lo < log10(v) <= hi on one axis.
struct RegimeBounds {
  double lo = 0.0;
  double hi = 0.0;
  Axis axis = Axis::X;

  RegimeBounds() = default;
  /// Throws InvalidArgument unless lo < hi.
  RegimeBounds(double lo, double hi, Axis axis);

  bool contains(double log_value) const noexcept { return lo < log_value && log_value <= hi; }

  friend bool operator==(const RegimeBounds&, const RegimeBounds&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct FitResult {
  double exponent = 0.0;  // slope in log10-log10 space
  double intercept = 0.0;
  double ses = 0.0;  // standard error of the slope
  double r2 = 0.0;
  std::size_t n_points = 0;
  RegimeBounds regime;
};

/// OLS of log10(y) on log10(x) over the points whose regime-axis value falls
/// inside the regime. Throws InvalidArgument on nonpositive coordinates and
/// InsufficientDataError when fewer than 3 points survive.
FitResult fit_loglog(std::span<const Point> points, const RegimeBounds& regime);

std::vector<Point> curve_points(const GrowthCurve& curve);
std::vector<Point> rank_points(const RankTable& table);

/// Per-(macro-class, corpus-kind) log10 start/end values plus the corpus-level bounds.
class RegimeMatrix {
 public:
  struct Cell {
    double start = 0.0;
    double end = 0.0;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  /// Corpus-level 2.0 < x <= 3.4 and the per-class matrices used in the analyses.
  static RegimeMatrix defaults();

  /// Throws InvalidArgument when start >= end.
  void set(MacroClass macro, CorpusKind kind, Cell cell);
  void set_corpus_level(Cell cell);

  /// Generic corpora fall back to the CANDOR column.
  Cell cell(const AnalysisUnit& unit, CorpusKind kind) const;
  Cell corpus_level() const noexcept { return corpus_level_; }

  /// Configured per-class cells keyed by (macro-class, corpus kind) as (start, end).
  const std::map<std::pair<MacroClass, CorpusKind>, std::pair<double, double>>& entries() const noexcept {
    return cells_;
  }

  RegimeBounds heaps(const AnalysisUnit& unit, CorpusKind kind) const;
  RegimeBounds zipf(const AnalysisUnit& unit, CorpusKind kind) const;

  friend bool operator==(const RegimeMatrix&, const RegimeMatrix&) = default;

 private:
  Cell corpus_level_{2.0, 3.4};
  std::map<std::pair<MacroClass, CorpusKind>, std::pair<double, double>> cells_;
};

/// Fits the averaged growth curve with the regime on the unique-types axis.
FitResult heaps_fit(const Corpus& corpus, const AnalysisUnit& unit, const RegimeMatrix& regimes);

/// Fits the corpus rank table with the regime on the rank axis. The reported
/// exponent is the slope, i.e. -alpha.
FitResult zipf_fit(const Corpus& corpus, const AnalysisUnit& unit, const RegimeMatrix& regimes);

struct ConversationFit {
  std::string conversation_id;
  FitResult fit;
};

struct PerConversationFits {
  std::vector<ConversationFit> fits;
  std::size_t skipped = 0;
};

/// Word-level Heaps fit per conversation; conversations with fewer than three
/// regime points are skipped and counted.
PerConversationFits per_conversation_exponents(const Corpus& corpus, const RegimeMatrix& regimes);

struct GroupFit {
  std::vector<std::string> conversation_ids;
  std::optional<FitResult> fit;
  std::string error;  // set when `fit` is empty ("empty group" or the fit failure)
};

struct InterjectionSplit {
  double median_share = 0.0;
  GroupFit low;
  GroupFit high;
  double low_proportion = 0.0;
  double high_proportion = 0.0;
};

/// Median cut on each conversation's interjection-token share; shares at or
/// below the median go to the low group. Runs the word-level Heaps fit per group.
InterjectionSplit interjection_split_fit(const Corpus& corpus, const RegimeMatrix& regimes);

/// "" below .01, "^" for [.01, .05), "*" from .05.
std::string ses_flag(double ses);

}  // namespace convoscale
