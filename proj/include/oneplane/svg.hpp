#pragma once

#include <string>

#include "oneplane/drawing.hpp"

namespace oneplane {

// schematic picture of the planarization: straight-line layout from a Tutte
// embedding per component, crossings drawn as x-marks
std::string svg_render(const drawing& d);

}   // namespace oneplane
