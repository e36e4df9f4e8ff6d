#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kanakey/layout.hpp"
#include "kanakey/lexicon.hpp"

namespace kanakey {

using EntryId = std::uint32_t;

/// Digit-sequence index over a lexicon.
///
/// Each entry sits at exactly one node, the one reached by the digits of
/// its encoded reading. Node candidate lists are kept in ranks_before order.
/// Nodes are numbered in preorder (children by digit value 0..9) and entries
/// by reading, so equal lexicons under equal layouts give equal tries no
/// matter whether they were built or deserialized.
class KeyTrie {
 public:
  static constexpr std::int32_t kNoChild = -1;

  struct Node {
    std::array<std::int32_t, 10> children;
    std::vector<EntryId> candidates;

    Node() { children.fill(kNoChild); }
    bool operator==(const Node&) const = default;
  };

  /// Throws UnknownKana naming the reading when it cannot be encoded.
  static KeyTrie build(const Lexicon& lexicon, const KeypadLayout& layout);

  std::span<const YomikataEntry> entries() const { return entries_; }
  const YomikataEntry& entry(EntryId id) const { return entries_.at(id); }
  std::span<const Node> nodes() const { return nodes_; }
  std::uint64_t layout_hash() const { return layout_hash_; }

  /// Entries whose encoded reading equals `seq`. Empty `seq` matches nothing.
  std::vector<EntryId> exact_matches(std::span<const Key> seq) const;

  /// Entries whose encoded reading strictly extends `seq`, best `limit`.
  /// Throws ContractViolation when limit is 0.
  std::vector<EntryId> prefix_predictions(std::span<const Key> seq, std::size_t limit) const;

  std::string serialize() const;
  static KeyTrie deserialize(std::string_view bytes);

  bool operator==(const KeyTrie&) const = default;

 private:
  const Node* walk(std::span<const Key> seq) const;
  void canonicalize();

  std::vector<YomikataEntry> entries_;
  std::vector<Node> nodes_;
  std::uint64_t layout_hash_ = 0;
};

/// Compiled index file layout, all integers little-endian:
///   "KTRI" | u8 version | u64 layout hash | u64 payload length | payload
/// payload is the root node in preorder:
///   u8 digit (0xFF at the root) | u32 candidate count | candidates |
///   u8 child count | children
/// candidate: u32 len + reading UTF-8 | u64 frequency | u32 form count |
///   forms (u32 len + surface UTF-8 | u64 weight)
inline constexpr std::string_view kIndexMagic = "KTRI";
inline constexpr std::uint8_t kIndexVersion = 1;

}  // namespace kanakey
