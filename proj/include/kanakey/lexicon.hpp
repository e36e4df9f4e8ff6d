#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kanakey/syllabary.hpp"

namespace kanakey {

/// A written form (usually with kanji) of a reading.
struct Midashigo {
  std::string surface;
  std::uint64_t weight = 0;

  bool operator==(const Midashigo&) const = default;
};

/// A reading with its corpus frequency and written forms, heaviest first.
struct YomikataEntry {
  KanaString reading;
  std::uint64_t frequency = 0;
  std::vector<Midashigo> forms;

  bool operator==(const YomikataEntry&) const = default;
};

/// Frequency descending, then reading by code point. Total over distinct
/// readings; every candidate list in the library uses it.
bool ranks_before(const YomikataEntry& a, const YomikataEntry& b);

/// Weight descending, then surface bytes ascending.
void sort_forms(std::vector<Midashigo>& forms);

/// Readings are unique; entries are kept sorted by reading.
class Lexicon {
 public:
  Lexicon() = default;

  /// Dictionary format: `reading<TAB>frequency[<TAB>form:weight,...]`.
  /// Repeated readings merge: frequencies add, forms concatenate.
  static Lexicon parse(std::string_view source, const SyllabaryTable& syllabary);

  /// Builds from entries, merging duplicates the same way parse does.
  static Lexicon from_entries(std::vector<YomikataEntry> entries,
                              const SyllabaryTable& syllabary);

  std::span<const YomikataEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const YomikataEntry* find(KanaView reading) const;

 private:
  std::vector<YomikataEntry> entries_;
};

}  // namespace kanakey
