#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "kanakey/error.hpp"
#include "kanakey/metrics.hpp"

using namespace kanakey;
using namespace kanakey::testing;

namespace {

std::vector<CorpusRecord> corpus(std::initializer_list<std::pair<const char*, std::uint64_t>> items) {
  std::vector<CorpusRecord> out;
  for (const auto& [r, n] : items) out.push_back({k(r), n});
  return out;
}

// Replays a word through the engine and counts the presses it took.
std::uint64_t engine_presses(const Engine& engine, const KanaString& reading) {
  auto s = engine.new_session();
  std::uint64_t presses = 0;
  for (Key key : engine.layout().encode(reading)) s = engine.press_digit(s, key), ++presses;
  const auto exact = std::count_if(s.candidates.begin(), s.candidates.end(),
                                   [](const Candidate& c) { return c.source == CandidateSource::Exact; });
  // Commit alone takes the top candidate.
  if (s.candidates.front().reading != reading) {
    do {
      s = engine.press_select(s);
      ++presses;
    } while (s.candidates[*s.cursor].reading != reading && *s.cursor + 1 < static_cast<std::size_t>(exact));
  }
  auto c = engine.press_commit(s);
  EXPECT_EQ(utf8::decode(c.emitted), reading);
  return presses + 1;
}

}  // namespace

TEST(Metrics, RationalReduces) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0/1");
  EXPECT_TRUE(Rational(11, 6) < Rational(7, 3));
  EXPECT_FALSE(Rational(2, 1) < Rational(4, 2));
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Metrics, DisambiguationExamples) {
  const auto trie = fixture_trie();
  const auto a = eval_disambiguation(*trie, *layout(), corpus({{"あさ", 3}}));
  EXPECT_EQ(a.kspc, Rational(3, 2));
  EXPECT_EQ(a.total_presses, 9u);
  EXPECT_EQ(a.rank_histogram.at(1), 3u);

  const auto b = eval_disambiguation(*trie, *layout(), corpus({{"いし", 1}}));
  EXPECT_EQ(b.total_presses, 5u);
  EXPECT_EQ(b.kspc, Rational(5, 2));
  EXPECT_EQ(b.rank_histogram.at(2), 1u);

  const auto empty = eval_disambiguation(*trie, *layout(), {});
  EXPECT_FALSE(empty.kspc.has_value());
  EXPECT_EQ(empty.total_presses, 0u);
  EXPECT_EQ(empty.total_kana, 0u);
}

TEST(Metrics, NoMatchExcluded) {
  const auto r = eval_disambiguation(*fixture_trie(), *layout(), corpus({{"あさ", 1}, {"らいう", 2}}));
  EXPECT_EQ(r.no_match_count, 2u);
  ASSERT_EQ(r.no_match_words.size(), 1u);
  EXPECT_EQ(r.no_match_words[0], k("らいう"));
  EXPECT_EQ(r.kspc, Rational(3, 2));
}

TEST(Metrics, MultitapExamples) {
  EXPECT_EQ(eval_multitap(*layout(), corpus({{"ぴょ", 1}})).total_presses, 10u);
  EXPECT_EQ(eval_multitap(*layout(), corpus({{"ぴょ", 1}})).kspc, Rational(5, 1));
  EXPECT_EQ(eval_multitap(*layout(), corpus({{"あ", 1}})).kspc, Rational(2, 1));
  EXPECT_EQ(eval_multitap(*layout(), corpus({{"あさ", 2}})).kspc, Rational(2, 1));
  EXPECT_THROW(eval_multitap(*layout(), corpus({{"あ", 1}, {"ア", 1}})), Error);
}

TEST(Metrics, AmbiguityStats) {
  const auto s = ambiguity_stats(*fixture_trie());
  EXPECT_EQ(s.entries, 5u);
  EXPECT_EQ(s.populated_nodes, 4u);
  EXPECT_EQ(s.max_class, 2u);
  EXPECT_EQ(s.mean_class, Rational(5, 4));
  EXPECT_EQ(s.ambiguous_fraction, Rational(2, 5));

  const auto single = ambiguity_stats(*build_trie(Lexicon::parse("あ\t1\n", syllabary())));
  EXPECT_EQ(single.max_class, 1u);
  EXPECT_EQ(single.ambiguous_fraction, Rational(0, 1));

  const auto merged = ambiguity_stats(*build_trie(Lexicon::parse("あ\t1\nあ\t2\n", syllabary())));
  EXPECT_EQ(merged.max_class, 1u);
}

TEST(Metrics, CompareFixtureCorpus) {
  const auto c = compare_methods(*fixture_trie(), *layout(), corpus({{"あさ", 1}, {"いし", 1}, {"あか", 1}}));
  // あさ 3, いし 5, あか 3 presses over 6 kana.
  EXPECT_EQ(c.disambiguation.kspc, Rational(11, 6));
  // あさ 2+2, いし 4+2, あか 2+2.
  EXPECT_EQ(c.multitap.kspc, Rational(7, 3));
  EXPECT_TRUE(*c.disambiguation.kspc <= Rational(2, 1));
  EXPECT_TRUE(*c.disambiguation.kspc < *c.multitap.kspc);
  // a-sa, i-shi, a-ka
  EXPECT_EQ(c.romaji.total_presses, 3u + 4u + 3u);
}

TEST(Metrics, CompareRankOneCorpus) {
  const auto c = compare_methods(*fixture_trie(), *layout(), corpus({{"あさ", 4}, {"あさひ", 1}}));
  EXPECT_EQ(c.disambiguation.kspc, Rational(4 * 3 + 4, 4 * 2 + 3));
  EXPECT_TRUE(*c.disambiguation.kspc < *c.multitap.kspc);
}

TEST(Metrics, CompareEmptyCorpus) {
  const auto c = compare_methods(*fixture_trie(), *layout(), {});
  EXPECT_FALSE(c.disambiguation.kspc);
  EXPECT_FALSE(c.multitap.kspc);
  EXPECT_FALSE(c.romaji.kspc);
  EXPECT_NE(format_comparison(c).find("kspc: absent"), std::string::npos);
}

TEST(Metrics, ParseCorpus) {
  const auto c = parse_corpus("# c\nあさ\t3\nいし\t1\n", syllabary());
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (CorpusRecord{k("あさ"), 3}));
  EXPECT_THROW(parse_corpus("あさ\t0\n", syllabary()), Error);
  EXPECT_THROW(parse_corpus("asa\t1\n", syllabary()), Error);
  EXPECT_THROW(parse_corpus("あさ\n", syllabary()), Error);
}

// Per-word press bounds, and the cost model agrees with an engine replay.
TEST(Metrics, PressBoundsAndEngineReplay) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 25; ++round) {
    const auto lex = random_lexicon(rng, 120, 5);
    const auto trie = build_trie(lex);
    const Engine engine(trie, layout());
    for (const auto& e : lex.entries()) {
      const std::vector<CorpusRecord> one{{e.reading, 1}};
      const auto d = eval_disambiguation(*trie, *layout(), one);
      ASSERT_EQ(d.rank_histogram.size(), 1u);
      const auto rank = d.rank_histogram.begin()->first;
      EXPECT_GE(d.total_presses, e.reading.size() + 1);
      EXPECT_EQ(d.total_presses == e.reading.size() + 1, rank == 1);
      EXPECT_EQ(d.total_presses, engine_presses(engine, e.reading));
      EXPECT_GE(eval_multitap(*layout(), one).total_presses, 2 * e.reading.size());
    }
  }
}

// kspc <= (min_len + r + 1) / min_len for corpora whose words all rank <= r.
TEST(Metrics, KspcBound) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> count(1, 20);
  for (int round = 0; round < 40; ++round) {
    const auto lex = random_lexicon(rng, 150, 6);
    const auto trie = build_trie(lex);
    std::vector<CorpusRecord> c;
    for (const auto& e : lex.entries()) {
      if (count(rng) % 2 == 0) c.push_back({e.reading, count(rng)});
    }
    if (c.empty()) continue;
    const auto report = eval_disambiguation(*trie, *layout(), c);
    std::size_t r = report.rank_histogram.rbegin()->first;
    std::size_t min_len = SIZE_MAX;
    for (const auto& rec : c) min_len = std::min(min_len, rec.reading.size());
    EXPECT_TRUE(*report.kspc <= Rational(min_len + r + 1, min_len))
        << report.kspc->str() << " r=" << r << " min_len=" << min_len;
  }
}

TEST(Metrics, ReportsAreDeterministic) {
  std::mt19937_64 rng(1);
  const auto lex = random_lexicon(rng);
  std::vector<CorpusRecord> c;
  for (const auto& e : lex.entries()) c.push_back({e.reading, e.frequency});
  c.push_back({k("ぬぬぬぬぬぬぬ"), 2});
  const auto trie = build_trie(lex);
  const auto a = format_comparison(compare_methods(*trie, *layout(), c));
  const auto b = format_comparison(compare_methods(*build_trie(lex), *layout(), c));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("no_match_word: ぬぬぬぬぬぬぬ"), std::string::npos);
}

TEST(Metrics, ReportFormat) {
  const auto r = eval_disambiguation(*fixture_trie(), *layout(), corpus({{"あさ", 1}, {"いし", 1}, {"あか", 1}}));
  EXPECT_EQ(format_report(r),
            "method: disambiguation\n"
            "words: 3\n"
            "kana: 6\n"
            "presses: 11\n"
            "kspc: 11/6 (1.833333)\n"
            "no_match: 0\n"
            "rank_histogram:\n"
            "rank\tcount\n"
            "1\t2\n"
            "2\t1\n");
}
