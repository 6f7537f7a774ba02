#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convoscale/corpus.hpp"

namespace convoscale {

/// Token-index gaps between successive events of one key.
struct InterarrivalSeries {
  std::string key;
  std::vector<std::size_t> gaps;
  std::size_t n_events = 0;
};

enum class ArrivalMode {
  Total,   // every occurrence of the key
  Unique,  // first occurrences of new types within a macro-class
};

/// Gaps between successive occurrences of `form`. Absent key -> empty series.
InterarrivalSeries interarrival_series(std::span<const std::string> forms, const std::string& form);

/// Class-keyed series over a conversation's token stream; positions index the
/// whole stream, so gaps span tokens of other classes.
InterarrivalSeries interarrival_series(const Conversation& conversation, MacroClass macro, ArrivalMode mode);

/// (sigma - mu) / (sigma + mu) with the population standard deviation.
/// Undefined for fewer than two gaps.
std::optional<double> burstiness(std::span<const std::size_t> gaps);

/// Pearson correlation of consecutive gap pairs (g_i, g_i+1). Undefined for
/// fewer than two pairs or when either marginal has zero variance.
std::optional<double> memory(std::span<const std::size_t> gaps);

struct BurstinessMemory {
  std::optional<double> b;
  std::optional<double> m;
};

BurstinessMemory burstiness_memory(std::span<const std::size_t> gaps);

enum class BmUnit { WordTypes, MacroClasses };

enum class AveragingOrder {
  KeysThenConversations,  // mean over keys within a conversation, then over conversations
  ConversationsThenKeys,  // mean per key over conversations, then over keys
};

struct BmOptions {
  bool shuffle = false;
  std::uint64_t seed = 0;
  AveragingOrder order = AveragingOrder::KeysThenConversations;
  /// Word types need more than this many occurrences to contribute.
  std::size_t min_occurrences_exclusive = 2;
};

/// Seed used to shuffle one conversation: depends only on (seed, conversation id).
std::uint64_t conversation_seed(std::uint64_t seed, const std::string& conversation_id) noexcept;

/// Corpus-level (B, M). Word-type unit: one series per type with more than two
/// occurrences. Class unit: the five class series. Undefined values are skipped
/// at every averaging step.
BurstinessMemory corpus_bm(const Corpus& corpus, BmUnit unit, const BmOptions& options);

/// (B, M) of one macro-class series, averaged over conversations.
BurstinessMemory class_bm(const Corpus& corpus, MacroClass macro, const BmOptions& options);

/// Token stream of a conversation, permuted when `options.shuffle` is set.
std::vector<Token> analysis_tokens(const Conversation& conversation, const BmOptions& options);

/// Splits at floor(T/3) and floor(2T/3) and returns the gaps inside each third.
/// `unit` nullopt pools the gaps of every word type; a macro-class uses that class's series.
/// Throws InvalidArgument for conversations shorter than 3 tokens.
std::array<std::vector<std::size_t>, 3> tertile_interarrivals(const Conversation& conversation,
                                                               const AnalysisUnit& unit);

/// Every word-type gap of a token stream, pooled.
std::vector<std::size_t> pooled_type_gaps(std::span<const std::string> forms);

}  // namespace convoscale
