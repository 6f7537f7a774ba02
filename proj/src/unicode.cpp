#include "convoscale/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "convoscale/errors.hpp"

namespace convoscale::unicode {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_ascii(std::string_view text) noexcept {
  for (unsigned char c : text) {
    if (c >= 0x80) return false;
  }
  return true;
}

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *instance;
}

}  // namespace

void append_utf8(std::string& out, char32_t cp) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    len = 0;
    U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), len, kReplacement);
  }
  out.append(buf, static_cast<std::size_t>(len));
}

std::string decode_lossy(std::string_view bytes, std::size_t* replaced) {
  std::size_t count = 0;
  std::string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  const auto length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      ++count;
      append_utf8(out, kReplacement);
    } else {
      out.append(bytes.data() + start, static_cast<std::size_t>(i - start));
    }
  }
  if (replaced != nullptr) *replaced = count;
  return out;
}

char32_t next_code_point(std::string_view text, std::size_t& pos) noexcept {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(s, i, static_cast<int32_t>(text.size()), c);
  pos = static_cast<std::size_t>(i);
  return c < 0 ? kReplacement : static_cast<char32_t>(c);
}

bool is_word_char(char32_t cp) noexcept {
  const auto c = static_cast<UChar32>(cp);
  return u_isUAlphabetic(c) || u_isdigit(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool is_space(char32_t cp) noexcept { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool has_word_char(std::string_view text) noexcept {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_word_char(next_code_point(text, pos))) return true;
  }
  return false;
}

std::string normalize_form(std::string_view text, bool case_fold) {
  if (is_ascii(text)) {
    std::string out(text);
    if (case_fold) {
      for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
    }
    return out;
  }
  UErrorCode status = U_ZERO_ERROR;
  const auto& normalizer = nfc();
  icu::UnicodeString value = normalizer.normalize(
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))),
      status);
  if (case_fold) {
    value.foldCase(U_FOLD_CASE_DEFAULT);
    value = normalizer.normalize(value, status);
  }
  if (U_FAILURE(status)) {
    throw Error(std::string("normalization failed: ") + u_errorName(status));
  }
  std::string out;
  value.toUTF8String(out);
  return out;
}

}  // namespace convoscale::unicode
