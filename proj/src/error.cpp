#include "kanakey/error.hpp"

namespace kanakey {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::UnknownKana: return "unknown-kana";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Transliteration: return "transliteration";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Conflict: return "conflict";
    case ErrorKind::IndexBadMagic: return "bad-magic";
    case ErrorKind::IndexBadVersion: return "bad-version";
    case ErrorKind::IndexTruncated: return "truncated";
    case ErrorKind::IndexCorrupt: return "corrupt";
    case ErrorKind::LayoutMismatch: return "layout-mismatch";
    case ErrorKind::NoMatch: return "no-match";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(to_string(kind));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line, std::optional<std::size_t> offset)
    : std::runtime_error(decorate(kind, message, line)),
      kind_(kind),
      line_(line),
      offset_(offset) {}

}  // namespace kanakey
