#pragma once

#include <string>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// Undirected DOT text, one edge per (vertex pair, color). Colors 0..5 get a
/// fixed pen color; higher colors are drawn black with a numeric label.
std::string export_dot(const ColoredGraph& g);

/// Pen color used for color c ("black" beyond the palette).
const char* dot_pen(Color c);

}  // namespace gemkit
