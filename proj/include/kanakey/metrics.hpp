#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kanakey/key_trie.hpp"
#include "kanakey/layout.hpp"

namespace kanakey {

/// Non-negative fraction in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "11/6"
  std::string str() const;

  bool operator==(const Rational&) const = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

struct CorpusRecord {
  KanaString reading;
  std::uint64_t count = 1;

  bool operator==(const CorpusRecord&) const = default;
};

/// `reading<TAB>count` lines, count >= 1. Readings must be syllabary kana.
std::vector<CorpusRecord> parse_corpus(std::string_view source, const SyllabaryTable& syllabary);

struct EvalReport {
  std::string method;
  std::uint64_t words = 0;  // evaluated word instances
  std::uint64_t total_presses = 0;
  std::uint64_t total_kana = 0;
  std::optional<Rational> kspc;  // absent when no kana were evaluated
  std::map<std::size_t, std::uint64_t> rank_histogram;
  std::uint64_t no_match_count = 0;
  std::vector<KanaString> no_match_words;

  bool operator==(const EvalReport&) const = default;
};

/// Presses to enter a word of `kana` kana that sits at 1-based `rank`
/// among its sequence's candidates: the digits, `rank` select presses
/// unless the word is first (commit auto-selects it), and one commit.
std::uint64_t disambiguation_presses(std::size_t kana, std::size_t rank);

EvalReport eval_disambiguation(const KeyTrie& trie, const KeypadLayout& layout,
                               std::span<const CorpusRecord> corpus);

/// Each kana costs its multi-tap presses plus one ADVANCE.
EvalReport eval_multitap(const KeypadLayout& layout, std::span<const CorpusRecord> corpus);

/// Letters typed with romaji entry. Reference only.
EvalReport eval_romaji(const SyllabaryTable& syllabary, std::span<const CorpusRecord> corpus);

struct AmbiguityStats {
  std::size_t entries = 0;
  std::size_t populated_nodes = 0;
  std::size_t max_class = 0;
  std::optional<Rational> mean_class;
  std::size_t ambiguous_entries = 0;  // share their sequence with another entry
  std::optional<Rational> ambiguous_fraction;

  bool operator==(const AmbiguityStats&) const = default;
};

AmbiguityStats ambiguity_stats(const KeyTrie& trie);

struct MethodComparison {
  EvalReport disambiguation;
  EvalReport multitap;
  EvalReport romaji;
  AmbiguityStats ambiguity;
};

/// Multi-tap and romaji are evaluated on the in-lexicon part of the corpus
/// so the three columns describe the same words.
MethodComparison compare_methods(const KeyTrie& trie, const KeypadLayout& layout,
                                 std::span<const CorpusRecord> corpus);

std::string format_report(const EvalReport& report);
std::string format_ambiguity(const AmbiguityStats& stats);
std::string format_comparison(const MethodComparison& comparison);

}  // namespace kanakey
