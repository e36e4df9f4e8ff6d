#include "kanakey/syllabary.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "kanakey/error.hpp"
#include "kanakey/packaged.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

std::string_view to_string(DiacriticClass c) {
  switch (c) {
    case DiacriticClass::Base: return "base";
    case DiacriticClass::Dakuten: return "dakuten";
    case DiacriticClass::Handakuten: return "handakuten";
    case DiacriticClass::Small: return "small";
  }
  return "base";
}

bool KanaRecord::exceptional() const {
  return character == U"ん" || character == U"っ";
}

namespace {

constexpr std::size_t kMaxRomaji = 3;
constexpr int kMatrixLimit = 10;

bool is_vowel(char c) {
  return c == 'a' || c == 'i' || c == 'u' || c == 'e' || c == 'o';
}

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

bool is_consonant(char c) { return is_lower(c) && !is_vowel(c); }

bool is_hiragana(char32_t c) { return c >= 0x3041 && c <= 0x309F; }

// consonant* vowel
bool syllable_shaped(std::string_view romaji) {
  if (romaji.empty() || !is_vowel(romaji.back())) return false;
  return std::all_of(romaji.begin(), romaji.end() - 1, is_consonant);
}

DiacriticClass parse_class(std::string_view s, std::size_t line) {
  if (s == "base") return DiacriticClass::Base;
  if (s == "dakuten") return DiacriticClass::Dakuten;
  if (s == "handakuten") return DiacriticClass::Handakuten;
  if (s == "small") return DiacriticClass::Small;
  throw Error(ErrorKind::Parse, "unknown class '" + std::string(s) + "'", line);
}

int parse_index(std::string_view s, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, std::string("bad ") + what + " '" + std::string(s) + "'",
                line);
  }
  return value;
}

KanaString parse_kana(std::string_view s, std::size_t line, const char* what) {
  KanaString kana;
  try {
    kana = utf8::decode(s);
  } catch (const Error&) {
    throw Error(ErrorKind::Parse, std::string("invalid UTF-8 in ") + what, line);
  }
  if (kana.empty() || kana.size() > 2 ||
      !std::all_of(kana.begin(), kana.end(), is_hiragana)) {
    throw Error(ErrorKind::Parse,
                std::string(what) + " must be one or two hiragana: '" + std::string(s) + "'",
                line);
  }
  return kana;
}

}  // namespace

SyllabaryTable SyllabaryTable::load(std::string_view source) {
  SyllabaryTable table;
  std::vector<std::size_t> line_of;
  std::size_t line_no = 0;
  for (auto line : utf8::split_lines(source)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fields = utf8::split(line, '\t');
    if (fields.size() != 6) {
      throw Error(ErrorKind::Parse,
                  "expected 6 tab-separated fields, got " + std::to_string(fields.size()),
                  line_no);
    }
    KanaRecord rec;
    rec.character = parse_kana(fields[0], line_no, "character");
    rec.romaji = std::string(fields[1]);
    rec.row = parse_index(fields[2], line_no, "row");
    rec.col = parse_index(fields[3], line_no, "col");
    rec.base = parse_kana(fields[4], line_no, "base");
    rec.diacritic = parse_class(fields[5], line_no);

    if (rec.romaji.empty() || rec.romaji.size() > kMaxRomaji ||
        !std::all_of(rec.romaji.begin(), rec.romaji.end(), is_lower)) {
      throw Error(ErrorKind::Parse, "romaji must be 1-3 lowercase letters", line_no);
    }
    if (!rec.exceptional() && !syllable_shaped(rec.romaji)) {
      throw Error(ErrorKind::Validation,
                  "romaji '" + rec.romaji + "' is not a vowel or consonant+vowel", line_no);
    }
    if (rec.row < 0 || rec.row >= kMatrixLimit || rec.col < 0 || rec.col >= kMatrixLimit) {
      throw Error(ErrorKind::Validation, "matrix position outside 10x10", line_no);
    }
    const bool is_base = rec.diacritic == DiacriticClass::Base;
    if (is_base != (rec.base == rec.character)) {
      throw Error(ErrorKind::Validation,
                  "base must equal character exactly for class base", line_no);
    }
    if (table.by_character_.contains(rec.character)) {
      throw Error(ErrorKind::Validation,
                  "duplicate character " + utf8::encode(rec.character), line_no);
    }
    if (table.by_romaji_.contains(rec.romaji)) {
      throw Error(ErrorKind::Validation, "duplicate romaji '" + rec.romaji + "'", line_no);
    }
    table.by_character_.emplace(rec.character, table.records_.size());
    table.by_romaji_.emplace(rec.romaji, table.records_.size());
    table.records_.push_back(std::move(rec));
    line_of.push_back(line_no);
  }

  std::set<std::pair<int, int>> cells;
  std::set<std::pair<KanaString, DiacriticClass>> derivations;
  for (std::size_t i = 0; i < table.records_.size(); ++i) {
    const auto& rec = table.records_[i];
    if (rec.diacritic == DiacriticClass::Base) {
      if (!cells.emplace(rec.row, rec.col).second) {
        throw Error(ErrorKind::Validation,
                    "matrix cell (" + std::to_string(rec.row) + "," + std::to_string(rec.col) +
                        ") used twice",
                    line_of[i]);
      }
      continue;
    }
    const auto* base = table.find(rec.base);
    if (base == nullptr || base->diacritic != DiacriticClass::Base) {
      throw Error(ErrorKind::Validation,
                  utf8::encode(rec.character) + " names base " + utf8::encode(rec.base) +
                      " which is not a base record",
                  line_of[i]);
    }
    if (!derivations.emplace(rec.base, rec.diacritic).second) {
      throw Error(ErrorKind::Validation,
                  "second " + std::string(to_string(rec.diacritic)) + " form of " +
                      utf8::encode(rec.base),
                  line_of[i]);
    }
  }

  const auto counts = table.counts();
  auto check = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
      throw Error(ErrorKind::Validation, std::string(what) + " count " + std::to_string(got) +
                                             " != " + std::to_string(want));
    }
  };
  check(counts.total, kTotal, "total");
  check(counts.undiacritic(), kUndiacritic, "undiacritic (base+small)");
  check(counts.derived(), kDerived, "derived (dakuten+handakuten)");
  return table;
}

std::shared_ptr<const SyllabaryTable> SyllabaryTable::packaged() {
  static const auto table =
      std::make_shared<const SyllabaryTable>(load(packaged::syllabary_source()));
  return table;
}

SyllabaryCounts SyllabaryTable::counts() const {
  SyllabaryCounts c;
  c.total = records_.size();
  for (const auto& r : records_) {
    switch (r.diacritic) {
      case DiacriticClass::Base: ++c.base; break;
      case DiacriticClass::Small: ++c.small; break;
      case DiacriticClass::Dakuten: ++c.dakuten; break;
      case DiacriticClass::Handakuten: ++c.handakuten; break;
    }
  }
  return c;
}

const KanaRecord* SyllabaryTable::find(KanaView syllable) const {
  auto it = by_character_.find(KanaString(syllable));
  return it == by_character_.end() ? nullptr : &records_[it->second];
}

const KanaRecord& SyllabaryTable::at(KanaView syllable) const {
  const auto* rec = find(syllable);
  if (rec == nullptr) {
    throw Error(ErrorKind::UnknownKana, "'" + utf8::encode(syllable) + "' is not in the syllabary");
  }
  return *rec;
}

KanaString SyllabaryTable::apply_diacritic(KanaView kana, DiacriticClass mark) const {
  const auto& rec = at(kana);
  if (mark == DiacriticClass::Base) return rec.base;
  for (const auto& r : records_) {
    if (r.base == rec.character && r.diacritic == mark) return r.character;
  }
  throw Error(ErrorKind::NotApplicable, std::string(to_string(mark)) + " does not apply to " +
                                            utf8::encode(kana));
}

KanaString SyllabaryTable::base_of(KanaView kana) const { return at(kana).base; }

std::vector<KanaString> SyllabaryTable::modifier_cycle(KanaView kana) const {
  const auto& base = at(kana).base;
  std::vector<const KanaRecord*> derived;
  for (const auto& r : records_) {
    if (r.base == base && r.character != base) derived.push_back(&r);
  }
  std::stable_sort(derived.begin(), derived.end(), [](const auto* a, const auto* b) {
    return static_cast<int>(a->diacritic) < static_cast<int>(b->diacritic);
  });
  std::vector<KanaString> cycle{base};
  for (const auto* r : derived) cycle.push_back(r->character);
  return cycle;
}

std::vector<KanaString> SyllabaryTable::syllables(KanaView reading) const {
  std::vector<KanaString> out;
  std::size_t i = 0;
  while (i < reading.size()) {
    if (i + 1 < reading.size() && find(reading.substr(i, 2)) != nullptr) {
      out.emplace_back(reading.substr(i, 2));
      i += 2;
    } else if (find(reading.substr(i, 1)) != nullptr) {
      out.emplace_back(reading.substr(i, 1));
      i += 1;
    } else {
      throw Error(ErrorKind::UnknownKana,
                  "'" + utf8::encode(reading.substr(i, 1)) + "' is not in the syllabary",
                  std::nullopt, i);
    }
  }
  return out;
}

KanaString SyllabaryTable::romaji_to_kana(std::string_view text) const {
  KanaString out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    // Doubled consonant marks gemination: "kka" -> っか.
    if (i + 1 < text.size() && c == text[i + 1] && is_consonant(c) && c != 'n') {
      out += U"っ";
      ++i;
      continue;
    }
    bool matched = false;
    for (std::size_t len = std::min(kMaxRomaji, text.size() - i); len > 0; --len) {
      auto it = by_romaji_.find(std::string(text.substr(i, len)));
      if (it != by_romaji_.end()) {
        out += records_[it->second].character;
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // A lone "n" not starting an n-syllable is ん.
    if (c == 'n') {
      const bool at_end = i + 1 == text.size();
      const char next = at_end ? '\0' : text[i + 1];
      if (at_end || (!is_vowel(next) && next != 'y')) {
        out += U"ん";
        ++i;
        continue;
      }
    }
    throw Error(ErrorKind::Transliteration,
                "no kana for romaji at byte " + std::to_string(i) + " ('" +
                    std::string(text.substr(i)) + "')",
                std::nullopt, i);
  }
  return out;
}

std::string SyllabaryTable::kana_to_romaji(KanaView reading) const {
  const auto parts = syllables(reading);
  // Built back to front: a っ doubles the first letter of whatever follows it.
  std::string suffix;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const auto& rec = at(*it);
    if (rec.character == U"っ" && !suffix.empty() && is_consonant(suffix.front()) &&
        suffix.front() != 'n') {
      suffix.insert(suffix.begin(), suffix.front());
    } else {
      suffix.insert(0, rec.romaji);
    }
  }
  return suffix;
}

KanaString to_katakana(KanaView text) {
  KanaString out(text);
  for (auto& c : out) {
    if ((c >= 0x3041 && c <= 0x3096) || c == 0x309D || c == 0x309E) c += 0x60;
  }
  return out;
}

}  // namespace kanakey
