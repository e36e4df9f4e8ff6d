#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kanakey {

/// A kana sequence, one hiragana scalar per element.
using KanaString = std::u32string;
using KanaView = std::u32string_view;

enum class DiacriticClass { Base, Dakuten, Handakuten, Small };

std::string_view to_string(DiacriticClass c);

/// One syllable of the table. Most syllables are a single scalar; the
/// palatalized ones (きゃ, ぎょ, ...) are a base scalar plus a small ゃゅょ.
struct KanaRecord {
  KanaString character;
  std::string romaji;
  int row = 0;
  int col = 0;
  KanaString base;
  DiacriticClass diacritic = DiacriticClass::Base;

  bool compound() const { return character.size() > 1; }
  /// ん and っ: the two syllables that are not a vowel or consonant+vowel.
  bool exceptional() const;

  bool operator==(const KanaRecord&) const = default;
};

struct SyllabaryCounts {
  std::size_t total = 0;
  std::size_t base = 0;        // DiacriticClass::Base only
  std::size_t small = 0;
  std::size_t dakuten = 0;
  std::size_t handakuten = 0;

  /// Syllables written without a diacritic mark (Base + Small).
  std::size_t undiacritic() const { return base + small; }
  std::size_t derived() const { return dakuten + handakuten; }
};

/// The kana inventory. Immutable after load.
///
/// The loader enforces the 108 / 71 / 37 contract: 108 syllables, 71 of
/// them without a diacritic mark and 37 formed by adding dakuten or
/// handakuten to one of those 71.
class SyllabaryTable {
 public:
  static constexpr std::size_t kTotal = 108;
  static constexpr std::size_t kUndiacritic = 71;
  static constexpr std::size_t kDerived = 37;

  /// Parses the tab-separated syllabary format
  /// `character, romaji, row, col, base, class`.
  static SyllabaryTable load(std::string_view source);

  /// The table shipped with the library.
  static std::shared_ptr<const SyllabaryTable> packaged();

  std::span<const KanaRecord> records() const { return records_; }
  SyllabaryCounts counts() const;

  const KanaRecord* find(KanaView syllable) const;
  const KanaRecord& at(KanaView syllable) const;  // throws UnknownKana
  bool contains(char32_t scalar) const { return find(KanaView(&scalar, 1)) != nullptr; }

  /// The record whose base is `kana` and whose class is `mark`.
  KanaString apply_diacritic(KanaView kana, DiacriticClass mark) const;
  KanaString base_of(KanaView kana) const;

  /// `kana` followed by its single-scalar derivations in the order
  /// Base, Dakuten, Handakuten, Small. This is the order the multi-tap
  /// modifier key steps through.
  std::vector<KanaString> modifier_cycle(KanaView kana) const;

  /// Splits a reading into syllables by greedy longest match, so きゃ stays
  /// together. Throws UnknownKana with the scalar offset on failure.
  std::vector<KanaString> syllables(KanaView reading) const;

  KanaString romaji_to_kana(std::string_view text) const;
  std::string kana_to_romaji(KanaView reading) const;

 private:
  std::vector<KanaRecord> records_;
  std::unordered_map<KanaString, std::size_t> by_character_;
  std::unordered_map<std::string, std::size_t> by_romaji_;
};

/// Character-level hiragana to katakana mapping. Non-hiragana passes through.
KanaString to_katakana(KanaView text);

}  // namespace kanakey
