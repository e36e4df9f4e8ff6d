#include "kanakey/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "kanakey/error.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

bool ranks_before(const YomikataEntry& a, const YomikataEntry& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.reading < b.reading;
}

void sort_forms(std::vector<Midashigo>& forms) {
  std::stable_sort(forms.begin(), forms.end(), [](const Midashigo& a, const Midashigo& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.surface < b.surface;
  });
}

namespace {

std::uint64_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return value;
}

void check_reading(const KanaString& reading, const SyllabaryTable& syllabary,
                   std::optional<std::size_t> line) {
  if (reading.empty()) throw Error(ErrorKind::Validation, "empty reading", line);
  for (std::size_t i = 0; i < reading.size(); ++i) {
    if (!syllabary.contains(reading[i])) {
      throw Error(ErrorKind::Validation,
                  "reading character '" + utf8::encode(reading[i]) + "' is not syllabary kana",
                  line, i);
    }
  }
}

}  // namespace

Lexicon Lexicon::from_entries(std::vector<YomikataEntry> entries,
                              const SyllabaryTable& syllabary) {
  std::map<KanaString, YomikataEntry> merged;
  for (auto& e : entries) {
    check_reading(e.reading, syllabary, std::nullopt);
    for (const auto& f : e.forms) {
      if (f.surface.empty()) throw Error(ErrorKind::Validation, "empty written form");
    }
    auto [it, inserted] = merged.try_emplace(e.reading, e);
    if (!inserted) {
      it->second.frequency += e.frequency;
      it->second.forms.insert(it->second.forms.end(), e.forms.begin(), e.forms.end());
    }
  }
  Lexicon lex;
  lex.entries_.reserve(merged.size());
  for (auto& [reading, entry] : merged) {
    sort_forms(entry.forms);
    lex.entries_.push_back(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::parse(std::string_view source, const SyllabaryTable& syllabary) {
  std::vector<YomikataEntry> entries;
  std::size_t line_no = 0;
  for (auto line : utf8::split_lines(source)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = utf8::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorKind::Parse, "expected reading<TAB>frequency[<TAB>forms]", line_no);
    }
    YomikataEntry entry;
    try {
      entry.reading = utf8::decode(fields[0]);
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "invalid UTF-8 in reading", line_no);
    }
    check_reading(entry.reading, syllabary, line_no);
    entry.frequency = parse_count(fields[1], line_no, "frequency");
    if (fields.size() == 3 && !fields[2].empty()) {
      for (auto item : utf8::split(fields[2], ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string_view::npos || colon == 0) {
          throw Error(ErrorKind::Parse, "expected form:weight, got '" + std::string(item) + "'",
                      line_no);
        }
        entry.forms.push_back(Midashigo{std::string(item.substr(0, colon)),
                                        parse_count(item.substr(colon + 1), line_no, "weight")});
      }
    }
    entries.push_back(std::move(entry));
  }
  return from_entries(std::move(entries), syllabary);
}

const YomikataEntry* Lexicon::find(KanaView reading) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), reading,
      [](const YomikataEntry& e, KanaView r) { return KanaView(e.reading) < r; });
  if (it == entries_.end() || it->reading != reading) return nullptr;
  return &*it;
}

}  // namespace kanakey
