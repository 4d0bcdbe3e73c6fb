#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// (color set, minimum vertex): stable key of a residue.
struct ResidueId {
  ColorSet colors;
  Vertex min_vertex = 0;

  friend bool operator==(const ResidueId&, const ResidueId&) = default;
  friend auto operator<=>(const ResidueId&, const ResidueId&) = default;
};

/// One connected component of the subgraph spanned by `colors`.
struct ResidueView {
  const ColoredGraph* parent = nullptr;
  ColorSet colors;
  std::vector<Vertex> vertices;  // sorted

  ResidueId id() const { return {colors, vertices.front()}; }
  int size() const { return colors.size(); }
  int order() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
};

/// Components of Γ_Δ, ordered by minimum vertex. Throws std::out_of_range if
/// Δ names a color the graph does not have.
std::vector<ResidueView> residues(const ColoredGraph& g, ColorSet colors);

/// A residue re-indexed as a standalone graph. Vertex i of `graph` is
/// vertex_labels[i] of the parent; local color j is color_labels[j].
struct ResidueGraph {
  ColoredGraph graph;
  std::vector<Color> color_labels;
  std::vector<Vertex> vertex_labels;
};

/// Needs at least two colors (smaller residues are vertices and edges).
ResidueGraph residue_as_graph(const ResidueView& rv);

/// Every residue of every color subset (the lattice keeps its own copy of the
/// graph), with O(1) lookup of the Δ-residue
/// through a vertex. Residues get dense indices grouped by color set, and
/// within a color set ordered by minimum vertex.
class ResidueLattice {
 public:
  static constexpr int kMaxDimension = 16;

  explicit ResidueLattice(const ColoredGraph& g);

  const ColoredGraph& graph() const { return graph_; }
  int num_colors() const { return num_colors_; }

  int size() const { return static_cast<int>(min_vertex_.size()); }
  /// g_Δ.
  int count(ColorSet colors) const {
    return offset_[colors.bits() + 1] - offset_[colors.bits()];
  }
  /// |R_h|: residues with exactly h colors.
  int count_of_size(int h) const { return by_size_[h]; }

  /// Index of the Δ-residue containing v.
  int index_of(ColorSet colors, Vertex v) const {
    return offset_[colors.bits()] + label_[static_cast<std::size_t>(colors.bits()) * order_ + v];
  }
  /// Indices of all Δ-residues.
  std::pair<int, int> range(ColorSet colors) const {
    return {offset_[colors.bits()], offset_[colors.bits() + 1]};
  }

  ColorSet colors(int residue) const { return colors_[residue]; }
  Vertex min_vertex(int residue) const { return min_vertex_[residue]; }
  ResidueId id(int residue) const { return {colors_[residue], min_vertex_[residue]}; }
  std::vector<Vertex> vertices(int residue) const;
  ResidueView view(int residue) const;

  /// Residues Λ with Λ' ≺ Λ and one more color.
  std::vector<int> covers_up(int residue) const;
  /// Residues Λ' ≺ Λ with one color fewer.
  std::vector<int> covers_down(int residue) const;
  bool contains(int outer, int inner) const;

 private:
  ColoredGraph graph_;
  int num_colors_;
  int order_;
  std::vector<int> label_;   // [mask * order + v] -> local index
  std::vector<int> offset_;  // size 2^k + 1
  std::vector<ColorSet> colors_;
  std::vector<Vertex> min_vertex_;
  std::vector<int> by_size_;
};

/// g_ĉ = 1 for every color c.
bool is_supercontracted(const ColoredGraph& g);

}  // namespace gemkit
