#pragma once

#include <string>

#include "wtab/frames.hpp"
#include "wtab/rs.hpp"
#include "wtab/stable.hpp"
#include "wtab/tables.hpp"

namespace wtab {

/// Text pictures in the orientation of the figures: top row first, each box
/// drawn as a right-aligned cell, horizontal positions taken from the row
/// offsets. Every line ends with '\n'.
std::string render(const Frame& f);
std::string render(const Table& t);
/// Adds a line with a '.' at x = 0 between the two halves.
std::string render(const STable& t);
std::string render(const Tableau& t);

}  // namespace wtab
