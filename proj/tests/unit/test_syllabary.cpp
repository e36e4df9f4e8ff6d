#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "kanakey/error.hpp"
#include "kanakey/packaged.hpp"

using namespace kanakey;
using kanakey::testing::k;
using kanakey::testing::syllabary;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::Io;
}

std::string packaged_without(std::string_view line_prefix) {
  std::string out;
  for (auto line : utf8::split_lines(packaged::syllabary_source())) {
    if (line.substr(0, line_prefix.size()) == line_prefix) continue;
    out.append(line);
    out.push_back('\n');
  }
  return out;
}

}  // namespace

TEST(Syllabary, PackagedCounts) {
  const auto c = syllabary().counts();
  EXPECT_EQ(c.total, 108u);
  EXPECT_EQ(c.undiacritic(), 71u);
  EXPECT_EQ(c.derived(), 37u);
  EXPECT_EQ(c.base, 67u);
  EXPECT_EQ(c.small, 4u);
  EXPECT_EQ(c.dakuten, 29u);
  EXPECT_EQ(c.handakuten, 8u);
}

TEST(Syllabary, EmptySourceNamesCount) {
  try {
    SyllabaryTable::load("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
    EXPECT_NE(std::string(e.what()).find("0 != 108"), std::string::npos) << e.what();
  }
}

TEST(Syllabary, BrokenBaseLink) {
  std::string source(packaged::syllabary_source());
  const std::string from = "が\tga\t1\t0\tか\tdakuten";
  const auto pos = source.find(from);
  ASSERT_NE(pos, std::string::npos);
  source.replace(pos, from.size(), "が\tga\t1\t0\tゐ\tdakuten");
  EXPECT_EQ(kind_of([&] { SyllabaryTable::load(source); }), ErrorKind::Validation);
}

TEST(Syllabary, MalformedLineReportsLineNumber) {
  try {
    SyllabaryTable::load("# header\nあ\ta\t0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Syllabary, CountMismatchWhenRecordDropped) {
  // Dropping ぴ leaves 107 records.
  EXPECT_EQ(kind_of([&] { SyllabaryTable::load(packaged_without("ぴ\t")); }),
            ErrorKind::Validation);
}

TEST(Syllabary, RejectsBadClassAndShape) {
  EXPECT_EQ(kind_of([] { SyllabaryTable::load("あ\ta\t0\t0\tあ\tvoiced\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { SyllabaryTable::load("か\tkk\t0\t0\tか\tbase\n"); }),
            ErrorKind::Validation);
  // base must equal character for class base
  EXPECT_EQ(kind_of([] { SyllabaryTable::load("か\tka\t0\t0\tき\tbase\n"); }),
            ErrorKind::Validation);
}

TEST(Syllabary, RecordShape) {
  std::set<std::pair<int, int>> cells;
  int max_row = 0, max_col = 0;
  for (const auto& r : syllabary().records()) {
    EXPECT_EQ(r.diacritic == DiacriticClass::Base, r.base == r.character);
    EXPECT_GE(r.romaji.size(), 1u);
    EXPECT_LE(r.romaji.size(), 3u);
    if (r.diacritic == DiacriticClass::Base) {
      EXPECT_TRUE(cells.emplace(r.row, r.col).second) << utf8::encode(r.character);
      max_row = std::max(max_row, r.row);
      max_col = std::max(max_col, r.col);
    }
  }
  // ten consonant rows; a i u e o ya yu yo
  EXPECT_EQ(max_row + 1, 10);
  EXPECT_EQ(max_col + 1, 8);
  EXPECT_TRUE(syllabary().at(k("ん")).exceptional());
  EXPECT_TRUE(syllabary().at(k("っ")).exceptional());
  EXPECT_FALSE(syllabary().at(k("か")).exceptional());
}

TEST(Syllabary, ApplyDiacritic) {
  EXPECT_EQ(syllabary().apply_diacritic(k("か"), DiacriticClass::Dakuten), k("が"));
  EXPECT_EQ(syllabary().apply_diacritic(k("は"), DiacriticClass::Handakuten), k("ぱ"));
  EXPECT_EQ(syllabary().apply_diacritic(k("きゃ"), DiacriticClass::Dakuten), k("ぎゃ"));
  EXPECT_EQ(syllabary().apply_diacritic(k("よ"), DiacriticClass::Small), k("ょ"));
  EXPECT_EQ(kind_of([] { syllabary().apply_diacritic(k("あ"), DiacriticClass::Dakuten); }),
            ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([] { syllabary().apply_diacritic(k("あ"), DiacriticClass::Handakuten); }),
            ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([] { syllabary().apply_diacritic(k("ア"), DiacriticClass::Dakuten); }),
            ErrorKind::UnknownKana);
}

TEST(Syllabary, BaseOf) {
  EXPECT_EQ(syllabary().base_of(k("が")), k("か"));
  EXPECT_EQ(syllabary().base_of(k("あ")), k("あ"));
  EXPECT_EQ(syllabary().base_of(k("ぴ")), k("ひ"));
  EXPECT_EQ(syllabary().base_of(k("っ")), k("つ"));
  EXPECT_EQ(kind_of([] { syllabary().base_of(k("x")); }), ErrorKind::UnknownKana);
}

// Brute force over every record and every mark.
TEST(Syllabary, DiacriticBaseRoundTripAllRecords) {
  const DiacriticClass marks[] = {DiacriticClass::Dakuten, DiacriticClass::Handakuten,
                                  DiacriticClass::Small};
  std::size_t applicable = 0;
  for (const auto& r : syllabary().records()) {
    const auto b = syllabary().base_of(r.character);
    EXPECT_EQ(syllabary().base_of(b), b);
    for (auto m : marks) {
      try {
        const auto derived = syllabary().apply_diacritic(r.character, m);
        EXPECT_EQ(syllabary().base_of(derived), r.character);
        ++applicable;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
      }
    }
  }
  EXPECT_EQ(applicable, 37u + 4u);
}

TEST(Syllabary, RomajiToKana) {
  const auto& s = syllabary();
  EXPECT_EQ(s.romaji_to_kana("a"), k("あ"));
  EXPECT_EQ(s.romaji_to_kana("kya"), k("きゃ"));
  EXPECT_EQ(s.romaji_to_kana("asa"), k("あさ"));
  EXPECT_EQ(s.romaji_to_kana("kitte"), k("きって"));
  EXPECT_EQ(s.romaji_to_kana("nn"), k("ん"));
  EXPECT_EQ(s.romaji_to_kana("hon"), k("ほん"));
  EXPECT_EQ(s.romaji_to_kana("kanji"), k("かんじ"));
  EXPECT_EQ(s.romaji_to_kana("pyo"), k("ぴょ"));
  EXPECT_EQ(s.romaji_to_kana(""), k(""));
}

TEST(Syllabary, RomajiResidueOffset) {
  try {
    syllabary().romaji_to_kana("kaql");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Transliteration);
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Syllabary, KanaToRomaji) {
  const auto& s = syllabary();
  EXPECT_EQ(s.kana_to_romaji(k("あさ")), "asa");
  EXPECT_EQ(s.kana_to_romaji(k("きゃ")), "kya");
  EXPECT_EQ(s.kana_to_romaji(k("")), "");
  EXPECT_EQ(s.kana_to_romaji(k("きって")), "kitte");
  EXPECT_EQ(s.kana_to_romaji(k("ほん")), "honn");
  EXPECT_EQ(s.kana_to_romaji(k("っ")), "xtu");
  EXPECT_THROW(s.kana_to_romaji(k("カ")), Error);
}

TEST(Syllabary, RomajiRoundTripRandomReadings) {
  const auto alphabet = kanakey::testing::kana_alphabet();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (int trial = 0; trial < 5000; ++trial) {
    KanaString r;
    for (auto n = len(rng); n > 0; --n) r.push_back(alphabet[pick(rng)]);
    const auto romaji = syllabary().kana_to_romaji(r);
    EXPECT_EQ(syllabary().romaji_to_kana(romaji), r) << romaji;
  }
}

TEST(Syllabary, RomajiRoundTripEveryRecord) {
  for (const auto& r : syllabary().records()) {
    EXPECT_EQ(syllabary().romaji_to_kana(syllabary().kana_to_romaji(r.character)), r.character);
  }
}

TEST(Syllabary, ModifierCycleOrder) {
  EXPECT_EQ(syllabary().modifier_cycle(k("は")),
            (std::vector<KanaString>{k("は"), k("ば"), k("ぱ")}));
  EXPECT_EQ(syllabary().modifier_cycle(k("ぴ")),
            (std::vector<KanaString>{k("ひ"), k("び"), k("ぴ")}));
  EXPECT_EQ(syllabary().modifier_cycle(k("つ")),
            (std::vector<KanaString>{k("つ"), k("づ"), k("っ")}));
  EXPECT_EQ(syllabary().modifier_cycle(k("あ")), (std::vector<KanaString>{k("あ")}));
}

TEST(Syllabary, Katakana) {
  EXPECT_EQ(to_katakana(k("きゃっと")), k("キャット"));
  EXPECT_EQ(to_katakana(k("abc")), k("abc"));
}

TEST(Syllabary, LoadIsDeterministic) {
  const auto a = SyllabaryTable::load(packaged::syllabary_source());
  const auto b = SyllabaryTable::load(packaged::syllabary_source());
  ASSERT_EQ(a.records().size(), b.records().size());
  EXPECT_TRUE(std::equal(a.records().begin(), a.records().end(), b.records().begin()));
}
