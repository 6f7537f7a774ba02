#include "convoscale/textprep.hpp"

#include <regex>

#include "convoscale/errors.hpp"
#include "convoscale/text_cleaner.hpp"
#include "convoscale/unicode.hpp"

namespace convoscale {

CleanProfile CleanProfile::builtin(std::string_view name) {
  if (name == "candor") {
    // NaturalTurn marks parallel speech with these glyphs.
    return {"candor", {{"≪", " "}, {"≫", " "}}};
  }
  if (name == "movies") {
    return {"movies",
            {
                {"</?[ibuIBU]>", ""},
                // UTF-8 read as cp1252, then re-encoded.
                {"â€™|â€˜", "'"},
                {"â€œ|â€\u009d", "\""},
                {"â€”|â€“", "-"},
                {"‘|’|‚|‛|′", "'"},
                {"“|”|„|‟|″", "\""},
                {"—|–|―|‒", "-"},
                {"…", "..."},
                {"\u00a0", " "},
                {"\t|\r|\n", " "},
            }};
  }
  if (name == "common") {
    return {"common",
            {
                {"\\b([Ss])orta\\b", "$1ort of"},
                {"\\b([Dd])unno\\b", "$1o not know"},
                {"\\b([Gg])onna\\b", "$1oing to"},
                {"\\b([Ww])anna\\b", "$1ant to"},
                {"\\b([Gg])otta\\b", "$1ot to"},
                {"\\s+", " "},
                {"^ | $", ""},
            }};
  }
  throw InvalidArgument("unknown clean profile '" + std::string(name) + "'");
}

TextCleaner::TextCleaner(const std::vector<CleanProfile>& profiles) {
  for (const auto& profile : profiles) {
    for (const auto& rule : profile.rules) {
      try {
        rules_.push_back({std::regex(rule.pattern, std::regex::ECMAScript), rule.replacement});
      } catch (const std::regex_error& e) {
        throw InvalidArgument("profile '" + profile.name + "': bad pattern '" + rule.pattern +
                              "': " + e.what());
      }
    }
  }
}

std::string TextCleaner::operator()(std::string_view text) const {
  std::string out(text);
  for (const auto& rule : rules_) {
    out = std::regex_replace(out, rule.pattern, rule.replacement);
  }
  return out;
}

std::string apply_profile(std::string_view text, const CleanProfile& profile) {
  return TextCleaner({profile})(text);
}

std::string clean_text(std::string_view text, const CleanProfile& profile, const CleanProfile& common) {
  return TextCleaner({profile, common})(text);
}

std::string clean_text(std::string_view text, const CleanProfile& profile) {
  if (profile.name == "common") return apply_profile(text, profile);
  return clean_text(text, profile, CleanProfile::builtin("common"));
}

namespace {

bool is_joiner(char32_t cp) noexcept { return cp == U'\'' || cp == U'’' || cp == U'-'; }

}  // namespace

std::vector<TokenText> tokenize(std::string_view text, bool case_fold) {
  std::vector<TokenText> tokens;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string surface(text.substr(begin, end - begin));
    std::string form = unicode::normalize_form(surface, case_fold);
    tokens.push_back({std::move(surface), std::move(form)});
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t begin = pos;
    const char32_t cp = unicode::next_code_point(text, pos);
    if (unicode::is_space(cp)) continue;

    if (unicode::is_word_char(cp)) {
      std::size_t end = pos;
      while (end < text.size()) {
        std::size_t probe = end;
        const char32_t next = unicode::next_code_point(text, probe);
        if (unicode::is_word_char(next)) {
          end = probe;
          continue;
        }
        if (is_joiner(next) && probe < text.size()) {
          std::size_t after = probe;
          if (unicode::is_word_char(unicode::next_code_point(text, after))) {
            end = after;
            continue;
          }
        }
        break;
      }
      emit(begin, end);
      pos = end;
      continue;
    }

    // Punctuation or symbol: group a run of the identical mark.
    std::size_t end = pos;
    while (end < text.size()) {
      std::size_t probe = end;
      if (unicode::next_code_point(text, probe) != cp) break;
      end = probe;
    }
    emit(begin, end);
    pos = end;
  }
  return tokens;
}

MacroClass recode_upos(Upos upos) noexcept {
  switch (upos) {
    case Upos::NOUN:
    case Upos::PROPN:
    case Upos::PRON:
      return MacroClass::Noun;
    case Upos::VERB:
    case Upos::ADV:
      return MacroClass::Verb;
    case Upos::ADP:
    case Upos::CCONJ:
    case Upos::SCONJ:
      return MacroClass::Func;
    case Upos::INTJ:
      return MacroClass::Intj;
    default:
      return MacroClass::Other;
  }
}

MacroClass recode_upos(std::string_view upos) { return recode_upos(parse_upos(upos)); }

}  // namespace convoscale
