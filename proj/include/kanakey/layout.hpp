#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanakey/syllabary.hpp"

namespace kanakey {

/// The twelve character keys of a telephone keypad, 3 columns x 4 rows:
///
///   1 2 3
///   4 5 6
///   7 8 9
///   * 0 #
enum class Key : char {
  D1 = '1', D2 = '2', D3 = '3',
  D4 = '4', D5 = '5', D6 = '6',
  D7 = '7', D8 = '8', D9 = '9',
  Star = '*', D0 = '0', Hash = '#',
};

inline constexpr std::array<Key, 12> kKeypadGrid = {
    Key::D1, Key::D2, Key::D3, Key::D4, Key::D5, Key::D6,
    Key::D7, Key::D8, Key::D9, Key::Star, Key::D0, Key::Hash,
};

inline constexpr std::array<Key, 10> kDigitKeys = {
    Key::D1, Key::D2, Key::D3, Key::D4, Key::D5,
    Key::D6, Key::D7, Key::D8, Key::D9, Key::D0,
};

constexpr char label(Key k) { return static_cast<char>(k); }
constexpr bool is_digit(Key k) { return label(k) >= '0' && label(k) <= '9'; }
/// 0-9 for digit keys.
constexpr int digit_value(Key k) { return label(k) - '0'; }

/// Throws Error(Parse) for anything but 0-9, * and #.
Key key_from_label(char c);

/// Digit keys only; in disambiguation mode one digit stands for one kana.
using KeySequence = std::vector<Key>;

std::string to_string(const std::vector<Key>& keys);
/// Throws Error(Parse) on non-digit characters.
KeySequence parse_key_sequence(std::string_view digits);

/// Key -> kana assignment, multi-tap cycles and the modifier/symbol keys.
/// Immutable after load.
class KeypadLayout {
 public:
  static constexpr Key kModifierKey = Key::Star;
  static constexpr Key kSymbolKey = Key::Hash;

  /// Parses `key<TAB>cycle` lines plus one `symbols<TAB>...` line.
  /// Every single-scalar syllabary record must be reachable, either in a
  /// cycle or through its base; compound syllables follow their first kana.
  static KeypadLayout load(std::string_view config,
                           std::shared_ptr<const SyllabaryTable> syllabary);
  static std::shared_ptr<const KeypadLayout> packaged();

  const SyllabaryTable& syllabary() const { return *syllabary_; }
  std::shared_ptr<const SyllabaryTable> syllabary_ptr() const { return syllabary_; }

  /// Multi-tap cycle of a digit key, or the symbol cycle for #.
  const KanaString& cycle(Key k) const;
  const KanaString& symbols() const { return symbols_; }

  /// Digit key of a syllable (or cycle extra such as ー).
  Key key_of(KanaView syllable) const;

  /// One digit per kana scalar.
  KeySequence encode(KanaView reading) const;

  /// Presses that produce `syllable` in multi-tap mode, e.g. ぴ -> 6 6 * *.
  std::vector<Key> multitap_expand(KanaView syllable) const;
  std::size_t multitap_cost(KanaView reading) const;

  /// FNV-1a over the canonical cycle text; tries record it.
  std::uint64_t content_hash() const { return hash_; }

 private:
  std::shared_ptr<const SyllabaryTable> syllabary_;
  std::array<KanaString, 10> cycles_;
  KanaString symbols_;
  std::unordered_map<KanaString, Key> key_of_;
  std::uint64_t hash_ = 0;
};

}  // namespace kanakey
