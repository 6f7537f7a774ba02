#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace convoscale {

/// The 17 Universal Dependencies part-of-speech tags.
enum class Upos : std::uint8_t {
  ADJ,
  ADP,
  ADV,
  AUX,
  CCONJ,
  DET,
  INTJ,
  NOUN,
  NUM,
  PART,
  PRON,
  PROPN,
  PUNCT,
  SCONJ,
  SYM,
  VERB,
  X,
};

inline constexpr std::array<Upos, 17> kAllUpos = {
    Upos::ADJ,  Upos::ADP,   Upos::ADV,   Upos::AUX,   Upos::CCONJ, Upos::DET,
    Upos::INTJ, Upos::NOUN,  Upos::NUM,   Upos::PART,  Upos::PRON,  Upos::PROPN,
    Upos::PUNCT, Upos::SCONJ, Upos::SYM,  Upos::VERB,  Upos::X,
};

/// Five-way grouping used by all per-class analyses.
enum class MacroClass : std::uint8_t { Noun, Verb, Other, Func, Intj };

inline constexpr std::array<MacroClass, 5> kAllMacroClasses = {
    MacroClass::Noun, MacroClass::Verb, MacroClass::Other, MacroClass::Func, MacroClass::Intj,
};

std::string_view upos_name(Upos tag) noexcept;

/// Throws InvalidArgument naming the tag when it is not one of the 17.
Upos parse_upos(std::string_view name);

/// Upper-case name ("NOUN", "VERB", "OTHER", "FUNC", "INTJ").
std::string_view macro_name(MacroClass macro) noexcept;

/// Lower-case CLI/config spelling ("noun", ...).
std::string_view macro_key(MacroClass macro) noexcept;

/// Accepts either spelling, case-insensitively.
std::optional<MacroClass> parse_macro(std::string_view name) noexcept;

constexpr std::size_t macro_index(MacroClass macro) noexcept {
  return static_cast<std::size_t>(macro);
}

/// Analysis unit: every token (nullopt) or one macro-class.
using AnalysisUnit = std::optional<MacroClass>;

std::string_view unit_key(const AnalysisUnit& unit) noexcept;

/// "all" or a macro key; throws InvalidArgument otherwise.
AnalysisUnit parse_unit(std::string_view name);

}  // namespace convoscale
