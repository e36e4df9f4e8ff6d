#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kanakey {

enum class ErrorKind {
  Parse,             // malformed input line
  Validation,        // well-formed input violating a content contract
  UnknownKana,       // character not in the syllabary
  NotApplicable,     // diacritic that does not derive anything
  Transliteration,   // romaji residue that maps to no kana
  Coverage,          // layout leaves syllabary characters unreachable
  Conflict,          // layout assigns a character to two keys
  IndexBadMagic,
  IndexBadVersion,
  IndexTruncated,
  IndexCorrupt,
  LayoutMismatch,    // trie was built against a different layout
  NoMatch,           // select/commit with no candidates
  ContractViolation, // operation not allowed in the current state
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports. `line` is 1-based for file formats,
/// `offset` is a byte or character position where the format defines one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> offset_;
};

}  // namespace kanakey
