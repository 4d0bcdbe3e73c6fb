#include "gemkit/dot.hpp"

#include <sstream>

namespace gemkit {

const char* dot_pen(Color c) {
  static const char* palette[] = {"red", "blue", "green3", "orange", "purple", "brown"};
  return c >= 0 && c < 6 ? palette[c] : "black";
}

std::string export_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph gem {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (Color c = 0; c < g.num_colors(); ++c) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex w = g.neighbor(v, c);
      if (v > w) continue;
      out << "  " << v << " -- " << w << " [color=\"" << dot_pen(c) << "\"";
      if (c >= 6) out << ", label=\"" << c << "\"";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gemkit
