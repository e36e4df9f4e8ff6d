#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kanakey::utf8 {

// Throws Error(Validation) on ill-formed input.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t scalar);

// Byte length of the last scalar in `text`, 0 when empty.
std::size_t last_scalar_size(std::string_view text);

// Splits on '\n', dropping one trailing '\r' per line. A final empty piece
// after a trailing newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace kanakey::utf8
