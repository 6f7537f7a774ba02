#include "convoscale/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "convoscale/errors.hpp"

namespace convoscale {

namespace {

std::vector<std::size_t> diffs(const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> gaps;
  if (positions.size() < 2) return gaps;
  gaps.reserve(positions.size() - 1);
  for (std::size_t i = 1; i < positions.size(); ++i) gaps.push_back(positions[i] - positions[i - 1]);
  return gaps;
}

struct Mean {
  double sum = 0.0;
  std::size_t n = 0;

  void add(const std::optional<double>& v) {
    if (v) {
      sum += *v;
      ++n;
    }
  }
  std::optional<double> value() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

// Occurrence positions per word type, in first-occurrence order.
std::vector<std::pair<std::string_view, std::vector<std::size_t>>> type_positions(
    std::span<const std::string> forms) {
  std::unordered_map<std::string_view, std::size_t> index;
  std::vector<std::pair<std::string_view, std::vector<std::size_t>>> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto [it, inserted] = index.try_emplace(forms[i], out.size());
    if (inserted) out.push_back({forms[i], {}});
    out[it->second].second.push_back(i);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-conversation (key, B/M) pairs for the requested unit.
std::vector<std::pair<std::string, BurstinessMemory>> keyed_bm(const std::vector<Token>& tokens,
                                                               BmUnit unit, const BmOptions& options) {
  std::vector<std::pair<std::string, BurstinessMemory>> out;
  if (unit == BmUnit::WordTypes) {
    std::vector<std::string> forms;
    forms.reserve(tokens.size());
    for (const auto& t : tokens) forms.push_back(t.form);
    for (const auto& [form, positions] : type_positions(forms)) {
      if (positions.size() <= options.min_occurrences_exclusive) continue;
      out.emplace_back(std::string(form), burstiness_memory(diffs(positions)));
    }
  } else {
    std::array<std::vector<std::size_t>, 5> positions;
    for (std::size_t i = 0; i < tokens.size(); ++i) positions[macro_index(tokens[i].macro)].push_back(i);
    for (auto macro : kAllMacroClasses) {
      out.emplace_back(std::string(macro_name(macro)), burstiness_memory(diffs(positions[macro_index(macro)])));
    }
  }
  return out;
}

}  // namespace

InterarrivalSeries interarrival_series(std::span<const std::string> forms, const std::string& form) {
  InterarrivalSeries series;
  series.key = form;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i] == form) positions.push_back(i);
  }
  series.n_events = positions.size();
  series.gaps = diffs(positions);
  return series;
}

InterarrivalSeries interarrival_series(const Conversation& conversation, MacroClass macro, ArrivalMode mode) {
  InterarrivalSeries series;
  series.key = std::string(macro_name(macro));
  std::vector<std::size_t> positions;
  std::unordered_set<std::string_view> seen;
  std::size_t index = 0;
  for (const auto& u : conversation.utterances) {
    for (const auto& t : u.tokens) {
      if (t.macro == macro && (mode == ArrivalMode::Total || seen.insert(t.form).second)) {
        positions.push_back(index);
      }
      ++index;
    }
  }
  series.n_events = positions.size();
  series.gaps = diffs(positions);
  return series;
}

std::optional<double> burstiness(std::span<const std::size_t> gaps) {
  if (gaps.size() < 2) return std::nullopt;
  const auto n = static_cast<double>(gaps.size());
  double mean = 0.0;
  for (auto g : gaps) mean += static_cast<double>(g);
  mean /= n;
  double var = 0.0;
  for (auto g : gaps) {
    const double d = static_cast<double>(g) - mean;
    var += d * d;
  }
  const double sigma = std::sqrt(var / n);
  return (sigma - mean) / (sigma + mean);
}

std::optional<double> memory(std::span<const std::size_t> gaps) {
  if (gaps.size() < 3) return std::nullopt;
  const std::size_t pairs = gaps.size() - 1;
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    mean_a += static_cast<double>(gaps[i]);
    mean_b += static_cast<double>(gaps[i + 1]);
  }
  mean_a /= static_cast<double>(pairs);
  mean_b /= static_cast<double>(pairs);
  double saa = 0.0;
  double sbb = 0.0;
  double sab = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const double da = static_cast<double>(gaps[i]) - mean_a;
    const double db = static_cast<double>(gaps[i + 1]) - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

BurstinessMemory burstiness_memory(std::span<const std::size_t> gaps) {
  return {burstiness(gaps), memory(gaps)};
}

std::uint64_t conversation_seed(std::uint64_t seed, const std::string& conversation_id) noexcept {
  return splitmix64(seed ^ splitmix64(stable_hash(conversation_id)));
}

std::vector<Token> analysis_tokens(const Conversation& conversation, const BmOptions& options) {
  std::vector<Token> tokens;
  tokens.reserve(conversation.token_count());
  for (const auto& u : conversation.utterances) tokens.insert(tokens.end(), u.tokens.begin(), u.tokens.end());
  if (options.shuffle) {
    std::mt19937_64 rng(conversation_seed(options.seed, conversation.id));
    std::shuffle(tokens.begin(), tokens.end(), rng);
  }
  return tokens;
}

BurstinessMemory corpus_bm(const Corpus& corpus, BmUnit unit, const BmOptions& options) {
  if (unit == BmUnit::MacroClasses) require_tagged_for(corpus, MacroClass::Noun);

  if (options.order == AveragingOrder::KeysThenConversations) {
    Mean b_mean;
    Mean m_mean;
    for (const auto& conversation : corpus.conversations) {
      Mean b_conv;
      Mean m_conv;
      for (const auto& [key, bm] : keyed_bm(analysis_tokens(conversation, options), unit, options)) {
        b_conv.add(bm.b);
        m_conv.add(bm.m);
      }
      b_mean.add(b_conv.value());
      m_mean.add(m_conv.value());
    }
    return {b_mean.value(), m_mean.value()};
  }

  std::map<std::string, std::pair<Mean, Mean>> per_key;
  for (const auto& conversation : corpus.conversations) {
    for (const auto& [key, bm] : keyed_bm(analysis_tokens(conversation, options), unit, options)) {
      auto& slot = per_key[key];
      slot.first.add(bm.b);
      slot.second.add(bm.m);
    }
  }
  Mean b_mean;
  Mean m_mean;
  for (const auto& [key, means] : per_key) {
    b_mean.add(means.first.value());
    m_mean.add(means.second.value());
  }
  return {b_mean.value(), m_mean.value()};
}

BurstinessMemory class_bm(const Corpus& corpus, MacroClass macro, const BmOptions& options) {
  require_tagged_for(corpus, macro);
  Mean b_mean;
  Mean m_mean;
  for (const auto& conversation : corpus.conversations) {
    const auto tokens = analysis_tokens(conversation, options);
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].macro == macro) positions.push_back(i);
    }
    const auto bm = burstiness_memory(diffs(positions));
    b_mean.add(bm.b);
    m_mean.add(bm.m);
  }
  return {b_mean.value(), m_mean.value()};
}

std::vector<std::size_t> pooled_type_gaps(std::span<const std::string> forms) {
  std::vector<std::size_t> gaps;
  for (const auto& [form, positions] : type_positions(forms)) {
    auto g = diffs(positions);
    gaps.insert(gaps.end(), g.begin(), g.end());
  }
  return gaps;
}

std::array<std::vector<std::size_t>, 3> tertile_interarrivals(const Conversation& conversation,
                                                               const AnalysisUnit& unit) {
  std::vector<Token> tokens;
  for (const auto& u : conversation.utterances) tokens.insert(tokens.end(), u.tokens.begin(), u.tokens.end());
  const std::size_t total = tokens.size();
  if (total < 3) {
    throw InvalidArgument("tertile_interarrivals: conversation '" + conversation.id + "' has " +
                          std::to_string(total) + " token(s), need at least 3");
  }
  const std::array<std::size_t, 4> cuts = {0, total / 3, 2 * total / 3, total};
  std::array<std::vector<std::size_t>, 3> out;
  for (std::size_t part = 0; part < 3; ++part) {
    if (!unit) {
      std::vector<std::string> forms;
      for (std::size_t i = cuts[part]; i < cuts[part + 1]; ++i) forms.push_back(tokens[i].form);
      out[part] = pooled_type_gaps(forms);
    } else {
      std::vector<std::size_t> positions;
      for (std::size_t i = cuts[part]; i < cuts[part + 1]; ++i) {
        if (tokens[i].macro == *unit) positions.push_back(i);
      }
      out[part] = diffs(positions);
    }
  }
  return out;
}

}  // namespace convoscale
