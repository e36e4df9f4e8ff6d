#include "kanakey/layout.hpp"

#include <algorithm>
#include <optional>

#include "kanakey/error.hpp"
#include "kanakey/packaged.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

Key key_from_label(char c) {
  switch (c) {
    case '0': case '1': case '2': case '3': case '4':
    case '5': case '6': case '7': case '8': case '9':
    case '*': case '#':
      return static_cast<Key>(c);
    default:
      throw Error(ErrorKind::Parse, std::string("not a keypad key: '") + c + "'");
  }
}

std::string to_string(const std::vector<Key>& keys) {
  std::string out;
  out.reserve(keys.size());
  for (Key k : keys) out.push_back(label(k));
  return out;
}

KeySequence parse_key_sequence(std::string_view digits) {
  KeySequence seq;
  seq.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::Parse, std::string("not a digit key: '") + c + "'");
    }
    seq.push_back(static_cast<Key>(c));
  }
  return seq;
}

namespace {

constexpr std::size_t kMinBaseKanaPerKey = 3;

bool in_kana_block(char32_t c) { return c >= 0x3040 && c <= 0x30FF; }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

KeypadLayout KeypadLayout::load(std::string_view config,
                                std::shared_ptr<const SyllabaryTable> syllabary) {
  KeypadLayout layout;
  layout.syllabary_ = std::move(syllabary);
  const auto& table = *layout.syllabary_;

  std::array<bool, 10> seen{};
  bool seen_symbols = false;
  std::size_t line_no = 0;
  for (auto line : utf8::split_lines(config)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "expected key<TAB>cycle", line_no);
    }
    const auto name = line.substr(0, tab);
    KanaString cycle;
    try {
      cycle = utf8::decode(line.substr(tab + 1));
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "invalid UTF-8", line_no);
    }
    if (name == "symbols") {
      if (seen_symbols) throw Error(ErrorKind::Parse, "second symbols line", line_no);
      seen_symbols = true;
      layout.symbols_ = std::move(cycle);
      continue;
    }
    if (name.size() != 1 || name[0] < '0' || name[0] > '9') {
      throw Error(ErrorKind::Parse, "unknown key '" + std::string(name) + "'", line_no);
    }
    const int d = name[0] - '0';
    if (seen[d]) throw Error(ErrorKind::Parse, "key " + std::string(name) + " listed twice", line_no);
    seen[d] = true;
    for (char32_t c : cycle) {
      const KanaString kana(1, c);
      if (!table.find(kana) && !in_kana_block(c)) {
        throw Error(ErrorKind::Validation, "'" + utf8::encode(c) + "' is not kana", line_no);
      }
      const Key key = static_cast<Key>(name[0]);
      auto [it, inserted] = layout.key_of_.emplace(kana, key);
      if (!inserted) {
        throw Error(ErrorKind::Conflict, utf8::encode(c) + " is assigned to keys " +
                                             std::string(1, label(it->second)) + " and " +
                                             std::string(1, label(key)),
                    line_no);
      }
    }
    layout.cycles_[d] = std::move(cycle);
  }

  // Derived single-scalar kana follow their base; a derived kana placed
  // directly on a cycle must sit on its base's key.
  std::vector<std::string> missing;
  for (const auto& rec : table.records()) {
    if (rec.compound()) continue;
    const auto base_it = layout.key_of_.find(rec.base);
    auto own_it = layout.key_of_.find(rec.character);
    if (own_it != layout.key_of_.end()) {
      if (base_it != layout.key_of_.end() && base_it->second != own_it->second) {
        throw Error(ErrorKind::Conflict, utf8::encode(rec.character) + " is on key " +
                                             std::string(1, label(own_it->second)) +
                                             " but its base is on key " +
                                             std::string(1, label(base_it->second)));
      }
      continue;
    }
    if (base_it == layout.key_of_.end()) {
      missing.push_back(utf8::encode(rec.character));
      continue;
    }
    layout.key_of_.emplace(rec.character, base_it->second);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) {
      if (!list.empty()) list += ",";
      list += m;
    }
    throw Error(ErrorKind::Coverage, "unreachable from any key: " + list);
  }
  for (const auto& rec : table.records()) {
    if (!rec.compound()) continue;
    layout.key_of_.emplace(rec.character, layout.key_of_.at(rec.character.substr(0, 1)));
  }

  for (Key k : kDigitKeys) {
    const auto& cycle = layout.cycles_[digit_value(k)];
    const auto base_count = std::count_if(cycle.begin(), cycle.end(), [&](char32_t c) {
      const auto* rec = table.find(KanaView(&c, 1));
      return rec != nullptr && rec->diacritic == DiacriticClass::Base;
    });
    if (static_cast<std::size_t>(base_count) < kMinBaseKanaPerKey) {
      throw Error(ErrorKind::Validation, std::string("key ") + label(k) + " carries " +
                                             std::to_string(base_count) +
                                             " base kana; at least 3 required");
    }
  }

  std::string canonical;
  for (Key k : kDigitKeys) {
    canonical += label(k);
    canonical += '\t';
    canonical += utf8::encode(layout.cycles_[digit_value(k)]);
    canonical += '\n';
  }
  canonical += "symbols\t" + utf8::encode(layout.symbols_) + "\n";
  canonical += "modifier\t*\n";
  layout.hash_ = fnv1a(canonical);
  return layout;
}

std::shared_ptr<const KeypadLayout> KeypadLayout::packaged() {
  static const auto layout = std::make_shared<const KeypadLayout>(
      load(packaged::default_layout_source(), SyllabaryTable::packaged()));
  return layout;
}

const KanaString& KeypadLayout::cycle(Key k) const {
  if (k == kSymbolKey) return symbols_;
  if (!is_digit(k)) throw Error(ErrorKind::ContractViolation, "modifier key has no cycle");
  return cycles_[digit_value(k)];
}

Key KeypadLayout::key_of(KanaView syllable) const {
  auto it = key_of_.find(KanaString(syllable));
  if (it == key_of_.end()) {
    throw Error(ErrorKind::UnknownKana, "'" + utf8::encode(syllable) + "' has no key");
  }
  return it->second;
}

KeySequence KeypadLayout::encode(KanaView reading) const {
  KeySequence seq;
  seq.reserve(reading.size());
  for (std::size_t i = 0; i < reading.size(); ++i) {
    auto it = key_of_.find(KanaString(1, reading[i]));
    if (it == key_of_.end()) {
      throw Error(ErrorKind::UnknownKana,
                  "'" + utf8::encode(reading[i]) + "' at position " + std::to_string(i) +
                      " has no key",
                  std::nullopt, i);
    }
    seq.push_back(it->second);
  }
  return seq;
}

std::vector<Key> KeypadLayout::multitap_expand(KanaView syllable) const {
  if (syllable.empty()) throw Error(ErrorKind::UnknownKana, "empty syllable");
  std::vector<Key> presses;
  if (syllable.size() > 1) {
    syllabary_->at(syllable);
    for (char32_t c : syllable) {
      auto part = multitap_expand(KanaView(&c, 1));
      presses.insert(presses.end(), part.begin(), part.end());
    }
    return presses;
  }

  const Key key = key_of(syllable);
  const auto& cycle = cycles_[digit_value(key)];
  const auto pos_of = [&](char32_t c) -> std::optional<std::size_t> {
    auto p = cycle.find(c);
    if (p == KanaString::npos) return std::nullopt;
    return p;
  };

  std::size_t taps = 0;
  std::size_t modifiers = 0;
  if (auto direct = pos_of(syllable[0])) {
    taps = *direct + 1;
  } else {
    const auto modcycle = syllabary_->modifier_cycle(syllable);
    const auto base = modcycle.front();
    taps = *pos_of(base[0]) + 1;
    modifiers = static_cast<std::size_t>(
        std::find(modcycle.begin(), modcycle.end(), KanaString(syllable)) - modcycle.begin());
  }
  presses.assign(taps, key);
  presses.insert(presses.end(), modifiers, kModifierKey);
  return presses;
}

std::size_t KeypadLayout::multitap_cost(KanaView reading) const {
  std::size_t total = 0;
  for (char32_t c : reading) total += multitap_expand(KanaView(&c, 1)).size();
  return total;
}

}  // namespace kanakey
