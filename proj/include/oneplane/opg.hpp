#pragma once

#include <string>

#include "oneplane/drawing.hpp"

namespace oneplane {

// OPG text format, one record per line, '#' starts a comment:
//   opg 1
//   vertex <id> [label]
//   edge <id> <u> <v>
//   cross <id> <e> <f> <pos|neg>
//   rot <vertex_id> e<edgeid> e<edgeid> ...
// Vertex ids are dense 0..n-1; edge and cross ids are sequential from 0.
// Rotations of fake vertices are implied by the cross records, never written.

sketch parse_opg_sketch(const std::string& text);
drawing parse_opg(const std::string& text);

std::string serialize_opg(const sketch& sk);
std::string serialize_opg(const drawing& d);

// true when the first payload line is an opg header
bool looks_like_opg(const std::string& text);

}   // namespace oneplane
