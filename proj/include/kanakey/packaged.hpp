#pragma once

#include <string_view>

// Data files compiled into the library from data/.
namespace kanakey::packaged {

std::string_view syllabary_source();
std::string_view default_layout_source();

}  // namespace kanakey::packaged
