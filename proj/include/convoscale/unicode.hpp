#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace convoscale::unicode {

/// Decodes UTF-8, substituting U+FFFD for each undecodable byte sequence.
/// `replaced` (optional) receives the number of substitutions.
std::string decode_lossy(std::string_view bytes, std::size_t* replaced = nullptr);

/// NFC, optionally followed by full case folding (and NFC again, since folding may denormalize).
std::string normalize_form(std::string_view text, bool case_fold = true);

// Code point classes used by the tokenizer.
bool is_word_char(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;

/// True when the text contains at least one letter or digit.
bool has_word_char(std::string_view text) noexcept;

/// Appends the UTF-8 encoding of `cp`.
void append_utf8(std::string& out, char32_t cp);

/// Iterates code points of valid UTF-8. `pos` is advanced past the decoded code point.
char32_t next_code_point(std::string_view text, std::size_t& pos) noexcept;

}  // namespace convoscale::unicode
