#include "kanakey/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kanakey/error.hpp"

namespace kanakey {

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::Io, "no such file: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

std::shared_ptr<const KeypadLayout> load_layout_file(const std::string& path) {
  if (path.empty()) return KeypadLayout::packaged();
  return std::make_shared<const KeypadLayout>(
      KeypadLayout::load(read_file(path), SyllabaryTable::packaged()));
}

std::shared_ptr<const KeyTrie> load_index_file(const std::string& path) {
  return std::make_shared<const KeyTrie>(KeyTrie::deserialize(read_file(path)));
}

}  // namespace kanakey
