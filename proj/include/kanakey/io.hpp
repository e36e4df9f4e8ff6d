#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "kanakey/key_trie.hpp"
#include "kanakey/layout.hpp"

namespace kanakey {

/// Whole-file read; throws Error(Io) with "no such file" when absent.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

/// The packaged default layout when `path` is empty.
std::shared_ptr<const KeypadLayout> load_layout_file(const std::string& path);
std::shared_ptr<const KeyTrie> load_index_file(const std::string& path);

}  // namespace kanakey
