#pragma once

// Shared fixtures and brute-force oracles. The oracles only use the layout's
// per-kana encoding and plain scans over the lexicon, never the trie.

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kanakey/engine.hpp"
#include "kanakey/key_trie.hpp"
#include "kanakey/layout.hpp"
#include "kanakey/lexicon.hpp"
#include "kanakey/syllabary.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey::testing {

inline constexpr const char* kFixtureDict =
    "あさ\t5000\t朝:4000\n"
    "いし\t2000\t石:2000,医師:1200,意思:900\n"
    "あか\t3000\t赤:2500,垢:100\n"
    "かさ\t1000\t傘:1000\n"
    "あさひ\t800\t朝日:700,旭:100\n";

inline std::shared_ptr<const KeypadLayout> layout() { return KeypadLayout::packaged(); }
inline const SyllabaryTable& syllabary() { return *SyllabaryTable::packaged(); }

inline Lexicon fixture_lexicon() { return Lexicon::parse(kFixtureDict, syllabary()); }

inline std::shared_ptr<const KeyTrie> build_trie(const Lexicon& lex) {
  return std::make_shared<const KeyTrie>(KeyTrie::build(lex, *layout()));
}

inline std::shared_ptr<const KeyTrie> fixture_trie() { return build_trie(fixture_lexicon()); }

inline Engine fixture_engine(EngineOptions options = {}) {
  return Engine(fixture_trie(), layout(), options);
}

inline KanaString k(const char* utf8_text) { return utf8::decode(utf8_text); }

inline std::vector<std::string> readings(const KeyTrie& trie, const std::vector<EntryId>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(utf8::encode(trie.entry(id).reading));
  return out;
}

inline std::vector<std::string> readings(const std::vector<Candidate>& cands) {
  std::vector<std::string> out;
  for (const auto& c : cands) out.push_back(utf8::encode(c.reading));
  return out;
}

/// Single-scalar syllabary kana, the alphabet readings are drawn from.
inline std::vector<char32_t> kana_alphabet() {
  std::vector<char32_t> out;
  for (const auto& r : syllabary().records()) {
    if (!r.compound()) out.push_back(r.character[0]);
  }
  return out;
}

/// Up to `max_entries` entries, readings of 1..max_len kana, Zipf-ish
/// frequencies with deliberate ties.
inline Lexicon random_lexicon(std::mt19937_64& rng, std::size_t max_entries = 200,
                              std::size_t max_len = 6) {
  static const auto alphabet = kana_alphabet();
  std::uniform_int_distribution<std::size_t> count_dist(1, max_entries);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> kana_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::uint64_t> freq_dist(1, 50);
  // Bias toward a handful of keys so collisions are common.
  std::uniform_int_distribution<int> coin(0, 3);
  const std::vector<char32_t> crowded = {U'あ', U'い', U'う', U'か', U'き', U'さ', U'し', U'た'};
  std::uniform_int_distribution<std::size_t> crowded_dist(0, crowded.size() - 1);

  std::vector<YomikataEntry> entries;
  const auto n = count_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    YomikataEntry e;
    const auto len = len_dist(rng);
    for (std::size_t j = 0; j < len; ++j) {
      e.reading.push_back(coin(rng) == 0 ? alphabet[kana_dist(rng)] : crowded[crowded_dist(rng)]);
    }
    const auto f = freq_dist(rng);
    e.frequency = f * f;
    if (coin(rng) == 0) e.forms.push_back({"形" + std::to_string(i), freq_dist(rng)});
    entries.push_back(std::move(e));
  }
  return Lexicon::from_entries(std::move(entries), syllabary());
}

inline std::vector<const YomikataEntry*> ranked(std::vector<const YomikataEntry*> v) {
  std::sort(v.begin(), v.end(),
            [](const YomikataEntry* a, const YomikataEntry* b) { return ranks_before(*a, *b); });
  return v;
}

/// Brute force: entries whose encoded reading equals `seq`.
inline std::vector<KanaString> oracle_exact(const Lexicon& lex, const KeySequence& seq) {
  std::vector<const YomikataEntry*> hits;
  if (seq.empty()) return {};
  for (const auto& e : lex.entries()) {
    if (layout()->encode(e.reading) == seq) hits.push_back(&e);
  }
  std::vector<KanaString> out;
  for (const auto* e : ranked(hits)) out.push_back(e->reading);
  return out;
}

/// Brute force: entries whose encoded reading strictly extends `seq`.
inline std::vector<KanaString> oracle_prefix(const Lexicon& lex, const KeySequence& seq,
                                             std::size_t limit) {
  std::vector<const YomikataEntry*> hits;
  for (const auto& e : lex.entries()) {
    const auto enc = layout()->encode(e.reading);
    if (enc.size() > seq.size() && std::equal(seq.begin(), seq.end(), enc.begin())) {
      hits.push_back(&e);
    }
  }
  std::vector<KanaString> out;
  for (const auto* e : ranked(hits)) {
    if (out.size() == limit) break;
    out.push_back(e->reading);
  }
  return out;
}

inline std::vector<KanaString> entry_readings(const KeyTrie& trie, const std::vector<EntryId>& ids) {
  std::vector<KanaString> out;
  for (auto id : ids) out.push_back(trie.entry(id).reading);
  return out;
}

/// Every digit sequence of length 0..max_len.
inline std::vector<KeySequence> all_sequences(std::size_t max_len) {
  std::vector<KeySequence> out{{}};
  std::vector<KeySequence> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<KeySequence> next;
    for (const auto& s : frontier) {
      for (Key d : kDigitKeys) {
        auto t = s;
        t.push_back(d);
        next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace kanakey::testing
