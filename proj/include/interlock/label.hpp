#pragma once

// Vertex labels are compared after Unicode NFC normalization and trimming
// of surrounding whitespace. Normalization is delegated to ICU.

#include <cstdint>
#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

#include "interlock/error.hpp"

namespace interlock {

inline bool is_valid_utf8(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  int32_t needed = 0;
  u_strFromUTF8(nullptr, 0, &needed, text.data(),
                static_cast<int32_t>(text.size()), &status);
  return status == U_BUFFER_OVERFLOW_ERROR || U_SUCCESS(status) ||
         status == U_STRING_NOT_TERMINATED_WARNING;
}

/// NFC-normalizes and trims `raw`. Throws InvalidLabel on ill-formed UTF-8.
inline std::string normalize_label(std::string_view raw) {
  if (raw.empty()) return {};
  if (!is_valid_utf8(raw)) {
    throw Error(ErrorKind::invalid_label, "label is not valid UTF-8");
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::invalid_label,
                std::string("ICU NFC normalizer unavailable: ") +
                    u_errorName(status));
  }
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  icu::UnicodeString normalized = nfc->normalize(text, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::invalid_label,
                std::string("NFC normalization failed: ") +
                    u_errorName(status));
  }
  normalized.trim();
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

}  // namespace interlock
