#include "kanakey/key_trie.hpp"

#include <algorithm>
#include <numeric>

#include "kanakey/error.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

KeyTrie KeyTrie::build(const Lexicon& lexicon, const KeypadLayout& layout) {
  KeyTrie trie;
  trie.layout_hash_ = layout.content_hash();
  trie.entries_.assign(lexicon.entries().begin(), lexicon.entries().end());
  trie.nodes_.emplace_back();
  for (EntryId id = 0; id < trie.entries_.size(); ++id) {
    const auto& reading = trie.entries_[id].reading;
    KeySequence seq;
    try {
      seq = layout.encode(reading);
    } catch (const Error& e) {
      throw Error(ErrorKind::UnknownKana,
                  "cannot encode reading " + utf8::encode(reading) + ": " + e.what());
    }
    std::size_t node = 0;
    for (Key k : seq) {
      auto& child = trie.nodes_[node].children[digit_value(k)];
      if (child == kNoChild) {
        child = static_cast<std::int32_t>(trie.nodes_.size());
        trie.nodes_.emplace_back();
      }
      node = static_cast<std::size_t>(trie.nodes_[node].children[digit_value(k)]);
    }
    trie.nodes_[node].candidates.push_back(id);
  }
  trie.canonicalize();
  return trie;
}

void KeyTrie::canonicalize() {
  // Entries by reading.
  std::vector<EntryId> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EntryId a, EntryId b) {
    return entries_[a].reading < entries_[b].reading;
  });
  std::vector<EntryId> new_id(entries_.size());
  std::vector<YomikataEntry> sorted;
  sorted.reserve(entries_.size());
  for (EntryId i = 0; i < order.size(); ++i) {
    new_id[order[i]] = i;
    sorted.push_back(std::move(entries_[order[i]]));
  }
  entries_ = std::move(sorted);

  // Nodes in preorder.
  std::vector<Node> renumbered;
  renumbered.reserve(nodes_.size());
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (old node, slot to patch)
  constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);
  stack.emplace_back(0, kNoSlot);
  while (!stack.empty()) {
    auto [old, slot] = stack.back();
    stack.pop_back();
    const std::size_t index = renumbered.size();
    if (slot != kNoSlot) {
      renumbered[slot / 10].children[slot % 10] = static_cast<std::int32_t>(index);
    }
    Node node;
    node.candidates = nodes_[old].candidates;
    for (auto& id : node.candidates) id = new_id[id];
    std::sort(node.candidates.begin(), node.candidates.end(),
              [&](EntryId a, EntryId b) { return ranks_before(entries_[a], entries_[b]); });
    renumbered.push_back(std::move(node));
    for (int d = 9; d >= 0; --d) {
      const auto child = nodes_[old].children[d];
      if (child != kNoChild) {
        stack.emplace_back(static_cast<std::size_t>(child), index * 10 + static_cast<std::size_t>(d));
      }
    }
  }
  nodes_ = std::move(renumbered);
}

const KeyTrie::Node* KeyTrie::walk(std::span<const Key> seq) const {
  if (nodes_.empty()) return nullptr;
  std::size_t node = 0;
  for (Key k : seq) {
    if (!is_digit(k)) return nullptr;
    const auto child = nodes_[node].children[digit_value(k)];
    if (child == kNoChild) return nullptr;
    node = static_cast<std::size_t>(child);
  }
  return &nodes_[node];
}

std::vector<EntryId> KeyTrie::exact_matches(std::span<const Key> seq) const {
  if (seq.empty()) return {};
  const auto* node = walk(seq);
  if (node == nullptr) return {};
  return node->candidates;
}

std::vector<EntryId> KeyTrie::prefix_predictions(std::span<const Key> seq,
                                                 std::size_t limit) const {
  if (limit == 0) throw Error(ErrorKind::ContractViolation, "prediction limit must be >= 1");
  const auto* start = walk(seq);
  if (start == nullptr) return {};
  std::vector<EntryId> found;
  std::vector<const Node*> stack;
  for (auto child : start->children) {
    if (child != kNoChild) stack.push_back(&nodes_[static_cast<std::size_t>(child)]);
  }
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    found.insert(found.end(), node->candidates.begin(), node->candidates.end());
    for (auto child : node->children) {
      if (child != kNoChild) stack.push_back(&nodes_[static_cast<std::size_t>(child)]);
    }
  }
  const auto by_rank = [&](EntryId a, EntryId b) { return ranks_before(entries_[a], entries_[b]); };
  if (found.size() > limit) {
    std::partial_sort(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(limit),
                      found.end(), by_rank);
    found.resize(limit);
  } else {
    std::sort(found.begin(), found.end(), by_rank);
  }
  return found;
}

// ---------------------------------------------------------------------------
// Binary format

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.append(s);
  }
  std::string& buffer() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::string_view str() { return bytes(u32()); }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw Error(ErrorKind::IndexTruncated, "index ends early");
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

constexpr std::uint8_t kRootLabel = 0xFF;
constexpr std::size_t kMaxDepth = 4096;

}  // namespace

std::string KeyTrie::serialize() const {
  Writer payload;
  // Explicit stack: (node, digit label)
  std::vector<std::pair<std::size_t, std::uint8_t>> stack{{0, kRootLabel}};
  while (!stack.empty()) {
    auto [index, digit] = stack.back();
    stack.pop_back();
    const auto& node = nodes_[index];
    payload.u8(digit);
    payload.u32(static_cast<std::uint32_t>(node.candidates.size()));
    for (EntryId id : node.candidates) {
      const auto& e = entries_[id];
      payload.str(utf8::encode(e.reading));
      payload.u64(e.frequency);
      payload.u32(static_cast<std::uint32_t>(e.forms.size()));
      for (const auto& f : e.forms) {
        payload.str(f.surface);
        payload.u64(f.weight);
      }
    }
    std::uint8_t child_count = 0;
    for (auto c : node.children) child_count += c != kNoChild;
    payload.u8(child_count);
    for (int d = 9; d >= 0; --d) {
      const auto child = node.children[d];
      if (child != kNoChild) stack.emplace_back(static_cast<std::size_t>(child), d);
    }
  }

  Writer out;
  out.buffer().append(kIndexMagic);
  out.u8(kIndexVersion);
  out.u64(layout_hash_);
  out.u64(payload.buffer().size());
  out.buffer().append(payload.buffer());
  return std::move(out.buffer());
}

KeyTrie KeyTrie::deserialize(std::string_view bytes) {
  if (bytes.size() < kIndexMagic.size() || bytes.substr(0, kIndexMagic.size()) != kIndexMagic) {
    throw Error(ErrorKind::IndexBadMagic, "not a compiled index (bad magic)");
  }
  Reader header(bytes.substr(kIndexMagic.size()));
  const auto version = header.u8();
  if (version != kIndexVersion) {
    throw Error(ErrorKind::IndexBadVersion,
                "unsupported index version " + std::to_string(version));
  }
  KeyTrie trie;
  trie.layout_hash_ = header.u64();
  const auto length = header.u64();
  if (length > header.remaining()) throw Error(ErrorKind::IndexTruncated, "payload cut short");
  if (length < header.remaining()) throw Error(ErrorKind::IndexCorrupt, "trailing bytes");
  Reader in(header.bytes(static_cast<std::size_t>(length)));

  // (parent node, children still to read)
  struct Frame {
    std::size_t node;
    std::size_t pending;
  };
  std::vector<Frame> stack;
  bool root_seen = false;
  do {
    const auto digit = in.u8();
    const bool is_root = !root_seen;
    if (is_root ? digit != kRootLabel : digit > 9) {
      throw Error(ErrorKind::IndexCorrupt, "bad node label");
    }
    root_seen = true;
    const std::size_t index = trie.nodes_.size();
    trie.nodes_.emplace_back();
    if (!is_root) {
      auto& parent = trie.nodes_[stack.back().node];
      if (parent.children[digit] != kNoChild) {
        throw Error(ErrorKind::IndexCorrupt, "duplicate child label");
      }
      parent.children[digit] = static_cast<std::int32_t>(index);
      --stack.back().pending;
    }
    const auto count = in.u32();
    for (std::uint32_t i = 0; i < count; ++i) {
      YomikataEntry e;
      try {
        e.reading = utf8::decode(in.str());
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::IndexTruncated) throw;
        throw Error(ErrorKind::IndexCorrupt, "reading is not UTF-8");
      }
      e.frequency = in.u64();
      const auto forms = in.u32();
      for (std::uint32_t f = 0; f < forms; ++f) {
        Midashigo m;
        m.surface = std::string(in.str());
        m.weight = in.u64();
        e.forms.push_back(std::move(m));
      }
      trie.nodes_[index].candidates.push_back(static_cast<EntryId>(trie.entries_.size()));
      trie.entries_.push_back(std::move(e));
    }
    const auto children = in.u8();
    if (children > 10) throw Error(ErrorKind::IndexCorrupt, "too many children");
    if (children > 0) {
      if (stack.size() >= kMaxDepth) throw Error(ErrorKind::IndexCorrupt, "trie too deep");
      stack.push_back({index, children});
    }
    while (!stack.empty() && stack.back().pending == 0) stack.pop_back();
  } while (!stack.empty());

  if (in.remaining() != 0) throw Error(ErrorKind::IndexCorrupt, "bytes after root node");
  trie.canonicalize();
  for (std::size_t i = 1; i < trie.entries_.size(); ++i) {
    if (trie.entries_[i - 1].reading == trie.entries_[i].reading) {
      throw Error(ErrorKind::IndexCorrupt, "duplicate reading");
    }
  }
  return trie;
}

}  // namespace kanakey
