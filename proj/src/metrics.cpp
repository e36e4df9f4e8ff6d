#include "kanakey/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "kanakey/error.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorKind::ContractViolation, "zero denominator");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

__extension__ using Wide = unsigned __int128;

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
}

std::vector<CorpusRecord> parse_corpus(std::string_view source, const SyllabaryTable& syllabary) {
  std::vector<CorpusRecord> corpus;
  std::size_t line_no = 0;
  for (auto line : utf8::split_lines(source)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = utf8::split(line, '\t');
    if (fields.size() != 2) throw Error(ErrorKind::Parse, "expected reading<TAB>count", line_no);
    CorpusRecord rec;
    try {
      rec.reading = utf8::decode(fields[0]);
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "invalid UTF-8 in reading", line_no);
    }
    if (rec.reading.empty()) throw Error(ErrorKind::Validation, "empty reading", line_no);
    for (char32_t c : rec.reading) {
      if (!syllabary.contains(c)) {
        throw Error(ErrorKind::Validation, "'" + utf8::encode(c) + "' is not syllabary kana",
                    line_no);
      }
    }
    const auto& count = fields[1];
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), rec.count);
    if (count.empty() || ec != std::errc() || ptr != count.data() + count.size() || rec.count == 0) {
      throw Error(ErrorKind::Parse, "count must be a positive integer", line_no);
    }
    corpus.push_back(std::move(rec));
  }
  return corpus;
}

std::uint64_t disambiguation_presses(std::size_t kana, std::size_t rank) {
  return kana + (rank <= 1 ? 0 : rank) + 1;
}

namespace {

void finish(EvalReport& report) {
  if (report.total_kana > 0) report.kspc = Rational(report.total_presses, report.total_kana);
}

std::optional<std::size_t> rank_of(const KeyTrie& trie, const KeypadLayout& layout,
                                   KanaView reading) {
  const auto exact = trie.exact_matches(layout.encode(reading));
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (trie.entry(exact[i]).reading == reading) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

EvalReport eval_disambiguation(const KeyTrie& trie, const KeypadLayout& layout,
                               std::span<const CorpusRecord> corpus) {
  EvalReport report;
  report.method = "disambiguation";
  for (const auto& rec : corpus) {
    const auto rank = rank_of(trie, layout, rec.reading);
    if (!rank) {
      report.no_match_count += rec.count;
      report.no_match_words.push_back(rec.reading);
      continue;
    }
    report.words += rec.count;
    report.total_kana += rec.reading.size() * rec.count;
    report.total_presses += disambiguation_presses(rec.reading.size(), *rank) * rec.count;
    report.rank_histogram[*rank] += rec.count;
  }
  finish(report);
  return report;
}

EvalReport eval_multitap(const KeypadLayout& layout, std::span<const CorpusRecord> corpus) {
  EvalReport report;
  report.method = "multitap";
  for (const auto& rec : corpus) {
    std::size_t cost = 0;
    try {
      cost = layout.multitap_cost(rec.reading);
    } catch (const Error& e) {
      throw Error(ErrorKind::Validation, utf8::encode(rec.reading) + ": " + e.what());
    }
    report.words += rec.count;
    report.total_kana += rec.reading.size() * rec.count;
    report.total_presses += (cost + rec.reading.size()) * rec.count;
  }
  finish(report);
  return report;
}

EvalReport eval_romaji(const SyllabaryTable& syllabary, std::span<const CorpusRecord> corpus) {
  EvalReport report;
  report.method = "romaji (reference)";
  for (const auto& rec : corpus) {
    report.words += rec.count;
    report.total_kana += rec.reading.size() * rec.count;
    report.total_presses += syllabary.kana_to_romaji(rec.reading).size() * rec.count;
  }
  finish(report);
  return report;
}

AmbiguityStats ambiguity_stats(const KeyTrie& trie) {
  AmbiguityStats stats;
  stats.entries = trie.entries().size();
  for (const auto& node : trie.nodes()) {
    const auto size = node.candidates.size();
    if (size == 0) continue;
    ++stats.populated_nodes;
    stats.max_class = std::max(stats.max_class, size);
    if (size > 1) stats.ambiguous_entries += size;
  }
  if (stats.populated_nodes > 0) {
    stats.mean_class = Rational(stats.entries, stats.populated_nodes);
    stats.ambiguous_fraction = Rational(stats.ambiguous_entries, stats.entries);
  }
  return stats;
}

MethodComparison compare_methods(const KeyTrie& trie, const KeypadLayout& layout,
                                 std::span<const CorpusRecord> corpus) {
  MethodComparison out;
  out.disambiguation = eval_disambiguation(trie, layout, corpus);
  std::vector<CorpusRecord> matched;
  for (const auto& rec : corpus) {
    if (rank_of(trie, layout, rec.reading)) matched.push_back(rec);
  }
  out.multitap = eval_multitap(layout, matched);
  out.romaji = eval_romaji(layout.syllabary(), matched);
  out.ambiguity = ambiguity_stats(trie);
  return out;
}

namespace {

std::string format_rational(const std::optional<Rational>& r) {
  if (!r) return "absent";
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.6f)", r->value());
  return r->str() + buf;
}

}  // namespace

std::string format_report(const EvalReport& report) {
  std::string out;
  out += "method: " + report.method + "\n";
  out += "words: " + std::to_string(report.words) + "\n";
  out += "kana: " + std::to_string(report.total_kana) + "\n";
  out += "presses: " + std::to_string(report.total_presses) + "\n";
  out += "kspc: " + format_rational(report.kspc) + "\n";
  out += "no_match: " + std::to_string(report.no_match_count) + "\n";
  for (const auto& w : report.no_match_words) out += "no_match_word: " + utf8::encode(w) + "\n";
  out += "rank_histogram:\n";
  out += "rank\tcount\n";
  for (const auto& [rank, count] : report.rank_histogram) {
    out += std::to_string(rank) + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string format_ambiguity(const AmbiguityStats& stats) {
  std::string out;
  out += "entries: " + std::to_string(stats.entries) + "\n";
  out += "sequences: " + std::to_string(stats.populated_nodes) + "\n";
  out += "max_class: " + std::to_string(stats.max_class) + "\n";
  out += "mean_class: " + format_rational(stats.mean_class) + "\n";
  out += "ambiguous_entries: " + std::to_string(stats.ambiguous_entries) + "\n";
  out += "ambiguous_fraction: " + format_rational(stats.ambiguous_fraction) + "\n";
  return out;
}

std::string format_comparison(const MethodComparison& comparison) {
  return format_report(comparison.disambiguation) + "\n" + format_report(comparison.multitap) +
         "\n" + format_report(comparison.romaji) + "\n" + format_ambiguity(comparison.ambiguity);
}

}  // namespace kanakey
