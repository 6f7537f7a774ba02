#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convoscale/pos.hpp"

namespace convoscale {

struct Token {
  std::string surface;
  std::string form;  // NFC + case-folded surface; the type key
  Upos upos = Upos::X;
  MacroClass macro = MacroClass::Other;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Builds a token whose form and macro are derived from surface and tag.
Token make_token(std::string surface, Upos upos, bool case_fold = true);

struct Utterance {
  std::string speaker_id;
  std::vector<Token> tokens;
  std::optional<double> start_s;
  std::optional<double> stop_s;
  // Source text before tokenization, when known (raw corpora carry it for the tagger).
  std::optional<std::string> text;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

enum class CorpusKind { Candor, MoviesIndividual, MoviesGrouped, Generic };

/// Canonical spelling used in JSONL ("movies_individual").
std::string_view kind_name(CorpusKind kind) noexcept;

/// Accepts underscores or hyphens; throws InvalidArgument.
CorpusKind parse_kind(std::string_view name);

using MetaValue = std::variant<std::string, std::vector<std::string>>;
using Meta = std::map<std::string, MetaValue>;

namespace meta_keys {
inline constexpr std::string_view kMovieId = "movie_id";
inline constexpr std::string_view kTitle = "title";
inline constexpr std::string_view kYear = "year";
inline constexpr std::string_view kGenres = "genres";
inline constexpr std::string_view kNullUtterances = "null_utterances";
inline constexpr std::string_view kSourceConversations = "source_conversations";
inline constexpr std::string_view kConfigHash = "config_sha256";
}  // namespace meta_keys

struct Conversation {
  std::string id;
  CorpusKind kind = CorpusKind::Generic;
  std::vector<Utterance> utterances;
  Meta meta;

  std::size_t token_count() const noexcept;

  /// Text value of a meta key; nullopt when absent or list-valued.
  std::optional<std::string> meta_text(std::string_view key) const;

  /// List value of a meta key (a text value becomes a one-element list).
  std::vector<std::string> meta_list(std::string_view key) const;

  /// Number of null (missing or empty) source lines recorded at load time.
  std::size_t null_utterances() const;

  friend bool operator==(const Conversation&, const Conversation&) = default;
};

struct Corpus {
  CorpusKind kind = CorpusKind::Generic;
  std::vector<Conversation> conversations;
  std::string provenance;

  std::size_t token_count() const noexcept;
  std::size_t utterance_count() const noexcept;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Token forms of a conversation in analysis order.
std::vector<std::string> form_stream(const Conversation& conversation);

/// Forms of the tokens in one macro-class, re-indexed within the filtered stream.
std::vector<std::string> form_stream(const Conversation& conversation, const AnalysisUnit& unit);

std::vector<MacroClass> macro_stream(const Conversation& conversation);

/// True when any token carries a tag other than the X placeholder.
bool is_tagged(const Corpus& corpus) noexcept;

/// Throws InvalidArgument when `unit` is a macro-class and the corpus carries only placeholder tags.
void require_tagged_for(const Corpus& corpus, const AnalysisUnit& unit);

/// FNV-1a; stable across platforms, used to derive per-conversation seeds.
std::uint64_t stable_hash(std::string_view bytes) noexcept;

}  // namespace convoscale
