#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convoscale/corpus.hpp"

namespace convoscale {

struct BasicStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single value
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  double cv = 0.0;  // sd / mean, 0 when mean is 0
};

/// Throws InvalidArgument on empty input.
BasicStats summarize(std::span<const double> values);

enum class Measure {
  Words,         // word tokens per conversation
  Utterances,    // utterances per conversation
  SpeakerWords,  // word tokens per (conversation, speaker)
};

/// A token counts as a word when its surface contains a letter or digit.
bool is_word(const Token& token) noexcept;

std::size_t word_count(const Conversation& conversation) noexcept;

std::vector<double> measure_values(const Corpus& corpus, Measure measure);

BasicStats basic_stats(const Corpus& corpus, Measure measure);

/// Unique forms / total tokens.
double ttr(const Conversation& conversation);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd corpus_ttr(const Corpus& corpus);

/// Throws InvalidArgument on length mismatch, fewer than 2 values, or zero variance.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

/// Longest stretch of consecutive tokens that introduce no new type.
std::size_t max_unique_run(std::span<const std::string> forms);
std::size_t max_unique_run(const Conversation& conversation);

struct RunReport {
  std::vector<std::pair<std::string, std::size_t>> max_runs;  // (conversation id, max run)
  std::size_t cutoff = 0;
  double median = 0.0;
  std::vector<std::string> outliers;  // max run > cutoff
};

/// Cutoff = smallest max-run value covering `coverage` of the conversations (nearest rank).
RunReport run_outliers(const Corpus& corpus, double coverage = 0.9995);

struct ClassShares {
  std::array<double, 5> total{};   // indexed by macro_index
  std::array<double, 5> unique{};  // distinct (form, class) pairs per class
};

/// Throws InvalidArgument for untagged corpora.
ClassShares pos_proportions(const Corpus& corpus);

struct InterjectionRow {
  std::string form;
  std::size_t count = 0;
  double share = 0.0;  // of all interjection tokens in the corpus
};

std::vector<InterjectionRow> top_interjections(const Corpus& corpus, std::size_t k);

/// Band edges for pause scoring, in seconds. Scores: -1 below `overlap_below`,
/// 0 below `short_below`, 1 below `medium_below`, 2 at or above `long_from`.
struct PauseThresholds {
  double overlap_below = 0.0;
  double short_below = 0.4;
  double medium_below = 1.25;
  double long_from = 1.25;

  /// Throws InvalidArgument unless the bands are ordered and contiguous.
  void validate() const;
};

/// Throws InvalidArgument for non-finite pauses.
int pause_score(double pause_s, const PauseThresholds& thresholds = {});

/// start(next) - stop(previous) at each speaker change where both timings exist.
std::vector<double> pauses(const Conversation& conversation);

}  // namespace convoscale
