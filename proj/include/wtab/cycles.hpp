#pragma once

#include <string_view>
#include <vector>

namespace wtab::detail {

/// Tokenizes cycle notation "(1 2 3)(4 -5)" into integer cycles. Commas are
/// accepted as separators. "id" and "()" yield no cycles.
std::vector<std::vector<int>> parse_cycles(std::string_view text);

}  // namespace wtab::detail
