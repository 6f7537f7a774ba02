#include "convoscale/descriptives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string_view>
#include <unordered_set>

#include "convoscale/errors.hpp"
#include "convoscale/scaling.hpp"
#include "convoscale/unicode.hpp"

namespace convoscale {

BasicStats summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("summarize: no values");
  BasicStats stats;
  stats.n = values.size();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  double sum = 0.0;
  for (double v : sorted) sum += v;
  stats.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - stats.mean) * (v - stats.mean);
    stats.sd = std::sqrt(ss / static_cast<double>(n - 1));
  }
  stats.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  stats.min = sorted.front();
  stats.max = sorted.back();
  stats.cv = stats.mean != 0.0 ? stats.sd / stats.mean : 0.0;
  return stats;
}

bool is_word(const Token& token) noexcept { return unicode::has_word_char(token.surface); }

std::size_t word_count(const Conversation& conversation) noexcept {
  std::size_t n = 0;
  for (const auto& u : conversation.utterances) {
    for (const auto& t : u.tokens) n += is_word(t) ? 1 : 0;
  }
  return n;
}

std::vector<double> measure_values(const Corpus& corpus, Measure measure) {
  std::vector<double> values;
  for (const auto& conversation : corpus.conversations) {
    switch (measure) {
      case Measure::Words:
        values.push_back(static_cast<double>(word_count(conversation)));
        break;
      case Measure::Utterances:
        values.push_back(static_cast<double>(conversation.utterances.size()));
        break;
      case Measure::SpeakerWords: {
        std::map<std::string, std::size_t> per_speaker;
        for (const auto& u : conversation.utterances) {
          auto& n = per_speaker[u.speaker_id];
          for (const auto& t : u.tokens) n += is_word(t) ? 1 : 0;
        }
        for (const auto& [speaker, n] : per_speaker) values.push_back(static_cast<double>(n));
        break;
      }
    }
  }
  return values;
}

BasicStats basic_stats(const Corpus& corpus, Measure measure) {
  if (corpus.conversations.empty()) throw InvalidArgument("basic_stats: empty corpus");
  return summarize(measure_values(corpus, measure));
}

double ttr(const Conversation& conversation) {
  const auto forms = form_stream(conversation);
  if (forms.empty()) throw InvalidArgument("ttr: conversation '" + conversation.id + "' has no tokens");
  std::unordered_set<std::string_view> types(forms.begin(), forms.end());
  return static_cast<double>(types.size()) / static_cast<double>(forms.size());
}

MeanSd corpus_ttr(const Corpus& corpus) {
  std::vector<double> values;
  for (const auto& conversation : corpus.conversations) {
    if (conversation.token_count() > 0) values.push_back(ttr(conversation));
  }
  const auto stats = summarize(values);
  return {stats.mean, stats.sd};
}

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("pearson_r: length mismatch");
  if (xs.size() < 2) throw InvalidArgument("pearson_r: need at least 2 pairs");
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw InvalidArgument("pearson_r: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::size_t max_unique_run(std::span<const std::string> forms) {
  std::unordered_set<std::string_view> seen;
  std::size_t run = 0;
  std::size_t best = 0;
  for (const auto& form : forms) {
    if (seen.insert(form).second) {
      run = 0;
    } else {
      best = std::max(best, ++run);
    }
  }
  return best;
}

std::size_t max_unique_run(const Conversation& conversation) {
  const auto forms = form_stream(conversation);
  return max_unique_run(forms);
}

RunReport run_outliers(const Corpus& corpus, double coverage) {
  if (!(coverage > 0.0 && coverage <= 1.0)) throw InvalidArgument("run_outliers: coverage must be in (0, 1]");
  if (corpus.conversations.empty()) throw InvalidArgument("run_outliers: empty corpus");
  RunReport report;
  std::vector<double> runs;
  for (const auto& conversation : corpus.conversations) {
    const auto run = max_unique_run(conversation);
    report.max_runs.emplace_back(conversation.id, run);
    runs.push_back(static_cast<double>(run));
  }
  std::vector<double> sorted = runs;
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(std::ceil(coverage * static_cast<double>(sorted.size()) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  report.cutoff = static_cast<std::size_t>(sorted[rank - 1]);
  report.median = summarize(runs).median;
  for (const auto& [id, run] : report.max_runs) {
    if (run > report.cutoff) report.outliers.push_back(id);
  }
  return report;
}

ClassShares pos_proportions(const Corpus& corpus) {
  if (!is_tagged(corpus)) throw InvalidArgument("pos_proportions: corpus is untagged");
  std::array<std::size_t, 5> totals{};
  std::array<std::unordered_set<std::string>, 5> uniques;
  std::size_t all = 0;
  for (const auto& conversation : corpus.conversations) {
    for (const auto& u : conversation.utterances) {
      for (const auto& t : u.tokens) {
        ++totals[macro_index(t.macro)];
        uniques[macro_index(t.macro)].insert(t.form);
        ++all;
      }
    }
  }
  std::size_t all_unique = 0;
  for (const auto& set : uniques) all_unique += set.size();
  ClassShares shares;
  for (std::size_t i = 0; i < 5; ++i) {
    shares.total[i] = static_cast<double>(totals[i]) / static_cast<double>(all);
    shares.unique[i] = static_cast<double>(uniques[i].size()) / static_cast<double>(all_unique);
  }
  return shares;
}

std::vector<InterjectionRow> top_interjections(const Corpus& corpus, std::size_t k) {
  if (k == 0) return {};
  std::vector<std::string> forms;
  for (const auto& conversation : corpus.conversations) {
    for (const auto& u : conversation.utterances) {
      for (const auto& t : u.tokens) {
        if (t.macro == MacroClass::Intj) forms.push_back(t.form);
      }
    }
  }
  if (forms.empty()) return {};
  const auto table = rank_frequency(forms);
  std::vector<InterjectionRow> rows;
  for (std::size_t i = 0; i < std::min(k, table.size()); ++i) {
    rows.push_back({table[i].type, table[i].count,
                    static_cast<double>(table[i].count) / static_cast<double>(forms.size())});
  }
  return rows;
}

void PauseThresholds::validate() const {
  if (!(overlap_below <= short_below && short_below <= medium_below)) {
    throw InvalidArgument("pause thresholds must be ordered");
  }
  if (medium_below != long_from) {
    throw InvalidArgument("pause thresholds leave a gap or overlap between the score-1 band (< " +
                          std::to_string(medium_below) + ") and the score-2 band (>= " +
                          std::to_string(long_from) + ")");
  }
}

int pause_score(double pause_s, const PauseThresholds& thresholds) {
  if (!std::isfinite(pause_s)) throw InvalidArgument("pause_score: non-finite pause");
  thresholds.validate();
  if (pause_s < thresholds.overlap_below) return -1;
  if (pause_s < thresholds.short_below) return 0;
  if (pause_s < thresholds.medium_below) return 1;
  return 2;
}

std::vector<double> pauses(const Conversation& conversation) {
  std::vector<double> out;
  for (std::size_t i = 1; i < conversation.utterances.size(); ++i) {
    const auto& prev = conversation.utterances[i - 1];
    const auto& next = conversation.utterances[i];
    if (prev.speaker_id == next.speaker_id) continue;
    if (prev.stop_s && next.start_s) out.push_back(*next.start_s - *prev.stop_s);
  }
  return out;
}

}  // namespace convoscale
