#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "convoscale/pos.hpp"

namespace convoscale {

struct CleanRule {
  std::string pattern;      // ECMAScript regular expression
  std::string replacement;  // may reference capture groups as $1

  friend bool operator==(const CleanRule&, const CleanRule&) = default;
};

/// A named, ordered list of idempotent rewrite rules.
struct CleanProfile {
  std::string name;
  std::vector<CleanRule> rules;

  /// Built-in profiles: "candor", "movies", "common".
  static CleanProfile builtin(std::string_view name);

  friend bool operator==(const CleanProfile&, const CleanProfile&) = default;
};

/// Applies `profile` then, unless the profile already is "common", the built-in common profile.
/// Whitespace runs are collapsed and trimmed by the common profile.
std::string clean_text(std::string_view text, const CleanProfile& profile);

/// Applies `profile` followed by `common`.
std::string clean_text(std::string_view text, const CleanProfile& profile, const CleanProfile& common);

/// Applies exactly the rules of `profile`.
std::string apply_profile(std::string_view text, const CleanProfile& profile);

struct TokenText {
  std::string surface;
  std::string form;

  friend bool operator==(const TokenText&, const TokenText&) = default;
};

/// Word-and-punctuation tokenizer.
///
/// A word is a maximal run of letters, digits, and combining marks; an
/// apostrophe (' or U+2019) or hyphen joins two such runs into one word, so
/// contractions such as "I'm" stay whole. Every other non-space code point is
/// punctuation: a run of the same mark ("...", "!!") is one token, distinct
/// marks are separate tokens. Whitespace only separates.
std::vector<TokenText> tokenize(std::string_view text, bool case_fold = true);

/// NOUN/PROPN/PRON -> NOUN; VERB/ADV -> VERB; ADP/CCONJ/SCONJ -> FUNC;
/// INTJ -> INTJ; everything else -> OTHER.
MacroClass recode_upos(Upos upos) noexcept;

/// String form; throws InvalidArgument naming an unknown tag.
MacroClass recode_upos(std::string_view upos);

}  // namespace convoscale
