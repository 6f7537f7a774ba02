#include "convoscale/pos.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "convoscale/errors.hpp"

namespace convoscale {

namespace {

constexpr std::array<std::string_view, 17> kUposNames = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

constexpr std::array<std::string_view, 5> kMacroNames = {"NOUN", "VERB", "OTHER", "FUNC", "INTJ"};
constexpr std::array<std::string_view, 5> kMacroKeys = {"noun", "verb", "other", "func", "intj"};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view upos_name(Upos tag) noexcept { return kUposNames[static_cast<std::size_t>(tag)]; }

Upos parse_upos(std::string_view name) {
  for (std::size_t i = 0; i < kUposNames.size(); ++i) {
    if (kUposNames[i] == name) return static_cast<Upos>(i);
  }
  throw InvalidArgument("unknown UPOS tag '" + std::string(name) + "'");
}

std::string_view macro_name(MacroClass macro) noexcept { return kMacroNames[macro_index(macro)]; }

std::string_view macro_key(MacroClass macro) noexcept { return kMacroKeys[macro_index(macro)]; }

std::optional<MacroClass> parse_macro(std::string_view name) noexcept {
  const std::string key = lower(name);
  for (std::size_t i = 0; i < kMacroKeys.size(); ++i) {
    if (kMacroKeys[i] == key) return static_cast<MacroClass>(i);
  }
  return std::nullopt;
}

std::string_view unit_key(const AnalysisUnit& unit) noexcept {
  return unit ? macro_key(*unit) : std::string_view("all");
}

AnalysisUnit parse_unit(std::string_view name) {
  if (lower(name) == "all") return std::nullopt;
  if (auto macro = parse_macro(name)) return macro;
  throw InvalidArgument("unknown analysis unit '" + std::string(name) +
                        "' (expected all, noun, verb, other, func, intj)");
}

}  // namespace convoscale
