#include "convoscale/corpus.hpp"

#include <algorithm>
#include <charconv>

#include "convoscale/errors.hpp"
#include "convoscale/textprep.hpp"
#include "convoscale/unicode.hpp"

namespace convoscale {

Token make_token(std::string surface, Upos upos, bool case_fold) {
  Token token;
  token.form = unicode::normalize_form(surface, case_fold);
  token.surface = std::move(surface);
  token.upos = upos;
  token.macro = recode_upos(upos);
  return token;
}

std::string_view kind_name(CorpusKind kind) noexcept {
  switch (kind) {
    case CorpusKind::Candor:
      return "candor";
    case CorpusKind::MoviesIndividual:
      return "movies_individual";
    case CorpusKind::MoviesGrouped:
      return "movies_grouped";
    case CorpusKind::Generic:
      return "generic";
  }
  return "generic";
}

CorpusKind parse_kind(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (auto kind : {CorpusKind::Candor, CorpusKind::MoviesIndividual, CorpusKind::MoviesGrouped,
                    CorpusKind::Generic}) {
    if (kind_name(kind) == key) return kind;
  }
  throw InvalidArgument("unknown corpus kind '" + std::string(name) + "'");
}

std::size_t Conversation::token_count() const noexcept {
  std::size_t n = 0;
  for (const auto& u : utterances) n += u.tokens.size();
  return n;
}

std::optional<std::string> Conversation::meta_text(std::string_view key) const {
  auto it = meta.find(std::string(key));
  if (it == meta.end()) return std::nullopt;
  if (const auto* text = std::get_if<std::string>(&it->second)) return *text;
  return std::nullopt;
}

std::vector<std::string> Conversation::meta_list(std::string_view key) const {
  auto it = meta.find(std::string(key));
  if (it == meta.end()) return {};
  if (const auto* text = std::get_if<std::string>(&it->second)) return {*text};
  return std::get<std::vector<std::string>>(it->second);
}

std::size_t Conversation::null_utterances() const {
  auto text = meta_text(meta_keys::kNullUtterances);
  if (!text) return 0;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
  if (ec != std::errc() || ptr != text->data() + text->size()) {
    throw ParseError(0, "conversation '" + id + "': null_utterances is not a count: " + *text);
  }
  return value;
}

std::size_t Corpus::token_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : conversations) n += c.token_count();
  return n;
}

std::size_t Corpus::utterance_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : conversations) n += c.utterances.size();
  return n;
}

std::vector<std::string> form_stream(const Conversation& conversation) {
  std::vector<std::string> forms;
  forms.reserve(conversation.token_count());
  for (const auto& u : conversation.utterances) {
    for (const auto& t : u.tokens) forms.push_back(t.form);
  }
  return forms;
}

std::vector<std::string> form_stream(const Conversation& conversation, const AnalysisUnit& unit) {
  if (!unit) return form_stream(conversation);
  std::vector<std::string> forms;
  for (const auto& u : conversation.utterances) {
    for (const auto& t : u.tokens) {
      if (t.macro == *unit) forms.push_back(t.form);
    }
  }
  return forms;
}

std::vector<MacroClass> macro_stream(const Conversation& conversation) {
  std::vector<MacroClass> out;
  out.reserve(conversation.token_count());
  for (const auto& u : conversation.utterances) {
    for (const auto& t : u.tokens) out.push_back(t.macro);
  }
  return out;
}

bool is_tagged(const Corpus& corpus) noexcept {
  for (const auto& c : corpus.conversations) {
    for (const auto& u : c.utterances) {
      for (const auto& t : u.tokens) {
        if (t.upos != Upos::X) return true;
      }
    }
  }
  return false;
}

void require_tagged_for(const Corpus& corpus, const AnalysisUnit& unit) {
  if (unit && !is_tagged(corpus)) {
    throw InvalidArgument("corpus carries only placeholder tags (X); unit '" +
                          std::string(unit_key(unit)) + "' needs a tagged corpus");
  }
}

std::uint64_t stable_hash(std::string_view bytes) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace convoscale
