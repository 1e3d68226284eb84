#pragma once

#include <string>

#include "laundry/gauss.hpp"

namespace laundry {

// Static drawing of a circle-with-chords in canonical position: the base arc
// as a horizontal line, chords as semicircular arcs below it. Cosmetic only.
std::string chord_diagram_svg(const CircleWithChords& c);

}  // namespace laundry
