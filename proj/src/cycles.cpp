#include "wtab/cycles.hpp"

#include <cctype>
#include <set>
#include <stdexcept>
#include <string>

namespace wtab::detail {

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == ','))
      ++i;
  };
  skip_space();
  if (text.substr(i) == "id" || text.substr(i).empty()) return cycles;

  std::set<int> seen;
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' at position " +
                                  std::to_string(i) + " in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i == text.size())
        throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      if (text[i] == '-' || text[i] == '+') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw std::invalid_argument("expected integer at position " +
                                    std::to_string(start) +
                                    " in cycle notation");
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (!seen.insert(v).second)
        throw std::invalid_argument("label " + std::to_string(v) +
                                    " repeated in cycle notation");
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace wtab::detail
