#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gemkit/color_set.hpp"

namespace gemkit {

/// Raised when a matching table does not describe a valid colored graph, or
/// when GEM text cannot be parsed. `kind()` tells the failure modes apart.
class GraphError : public std::runtime_error {
 public:
  enum class Kind { Syntax, NotInvolution, FixedPoint, Disconnected, OddOrder };

  GraphError(Kind kind, const std::string& what, int line = 0, int column = 0);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

const char* to_string(GraphError::Kind kind);

/// An (n+1)-colored graph: n+1 fixed-point-free involutions on the vertex set
/// {0, ..., order-1}, whose union is connected. Immutable once constructed.
///
/// Parallel edges are implicit: colors c and d both join u and v when
/// neighbor(u, c) == neighbor(u, d) == v.
class ColoredGraph {
 public:
  /// Validates and takes ownership of the matchings; `matchings[c][v]` is the
  /// c-neighbour of v. Throws GraphError.
  ColoredGraph(int dimension, std::vector<std::vector<Vertex>> matchings);

  /// The order-2 graph with all n+1 colors joining vertices 0 and 1.
  static ColoredGraph dipole_graph(int dimension);

  int dimension() const { return dimension_; }
  int num_colors() const { return dimension_ + 1; }
  int order() const { return order_; }
  /// Half the order.
  int half_order() const { return order_ / 2; }
  ColorSet all_colors() const { return ColorSet::all(num_colors()); }

  Vertex neighbor(Vertex v, Color c) const {
    return adjacency_[static_cast<std::size_t>(c) * order_ + v];
  }
  std::span<const Vertex> matching(Color c) const {
    return {adjacency_.data() + static_cast<std::size_t>(c) * order_,
            static_cast<std::size_t>(order_)};
  }
  /// Colors of the edges joining u and v.
  ColorSet colors_between(Vertex u, Vertex v) const;

  std::vector<std::vector<Vertex>> matchings() const;

  /// Relabels vertices: vertex v becomes perm[v].
  ColoredGraph relabeled(std::span<const Vertex> perm) const;
  /// Recolors: new color i is old color color_order[i].
  ColoredGraph recolored(std::span<const Color> color_order) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int dimension_ = 0;
  int order_ = 0;
  std::vector<Vertex> adjacency_;
};

/// The two color classes of a proper 2-coloring of the vertices; `side[v]` is
/// 0 or 1, with side[0] == 0.
struct Bipartition {
  std::vector<int> side;

  std::vector<Vertex> first() const;
  std::vector<Vertex> second() const;
};

/// The 2-coloring, if one exists. Unique up to swap because the graph is
/// connected.
std::optional<Bipartition> bipartition(const ColoredGraph& g);
inline bool is_bipartite(const ColoredGraph& g) { return bipartition(g).has_value(); }

/// Number of connected components of the subgraph spanned by `colors`.
int count_components(std::span<const std::vector<Vertex>> matchings, int order);

// GEM v1 text:
//   gem <n> <order>
//   <c>: <img_0> ... <img_{order-1}>      (one line per color)
// '#' starts a comment.
ColoredGraph parse_gem(std::string_view text);
std::string to_gem(const ColoredGraph& g);

// Single-line catalogue code: "<n>;<order>;<imgs color 0>;...;<imgs color n>",
// images comma-separated.
ColoredGraph parse_code(std::string_view code);
std::string to_code(const ColoredGraph& g);

}  // namespace gemkit
