#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

enum class Equivalence { ColorPreserving, ColorPermuting };

const char* to_string(Equivalence eq);
/// Accepts "color-preserving" / "color-permuting".
Equivalence parse_equivalence(std::string_view text);

/// Total-order key over graphs: equal iff the graphs are isomorphic under the
/// chosen equivalence.
struct CanonicalCode {
  Equivalence equivalence = Equivalence::ColorPreserving;
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto cmp = a.equivalence <=> b.equivalence; cmp != 0) return cmp;
    return a.bytes.compare(b.bytes) <=> 0;
  }
};

/// A canonical labeling of a matching table: applying `color_order` (new color
/// i is old color color_order[i]) and then `vertex_perm` (v becomes
/// vertex_perm[v]) yields `table`, which is the same for isomorphic inputs.
struct CanonicalLabeling {
  CanonicalCode code;
  std::vector<Color> color_order;
  std::vector<Vertex> vertex_perm;
  std::vector<std::vector<Vertex>> table;
};

// Each connected component is labelled by a breadth-first search that scans
// colors in a fixed order; every start vertex (and, for ColorPermuting, every
// color order) is tried and the lexicographically least table wins. Component
// codes are sorted, so disconnected tables are handled too. Works on any list
// of fixed-point-free involutions of equal length.
CanonicalLabeling canonical_labeling(std::span<const std::vector<Vertex>> matchings, int order,
                                     Equivalence eq);

CanonicalCode canonical_form(const ColoredGraph& g, Equivalence eq);
ColoredGraph canonical_representative(const ColoredGraph& g, Equivalence eq);
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, Equivalence eq);

}  // namespace gemkit
