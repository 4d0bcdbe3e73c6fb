#include "gemkit/residues.hpp"

#include <algorithm>
#include <stdexcept>

namespace gemkit {

namespace {

void check_colors(const ColoredGraph& g, ColorSet colors) {
  if (!colors.is_subset_of(g.all_colors())) {
    throw std::out_of_range("color set " + colors.to_string() + " exceeds colors 0.." +
                            std::to_string(g.dimension()));
  }
}

// Labels components of Γ_Δ by increasing minimum vertex; returns their count.
int label_components(const ColoredGraph& g, ColorSet colors, std::span<int> label,
                     std::vector<Vertex>& stack) {
  std::fill(label.begin(), label.end(), -1);
  const auto cs = colors.colors();
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : cs) {
        const Vertex w = g.neighbor(v, c);
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return next;
}

}  // namespace

bool ResidueView::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<ResidueView> residues(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  std::vector<int> label(g.order());
  std::vector<Vertex> stack;
  const int count = label_components(g, colors, label, stack);
  std::vector<ResidueView> out(count);
  for (auto& rv : out) {
    rv.parent = &g;
    rv.colors = colors;
  }
  for (Vertex v = 0; v < g.order(); ++v) out[label[v]].vertices.push_back(v);
  return out;
}

ResidueGraph residue_as_graph(const ResidueView& rv) {
  if (rv.colors.size() < 2) {
    throw std::invalid_argument("residue_as_graph needs at least two colors");
  }
  const ColoredGraph& g = *rv.parent;
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < rv.vertices.size(); ++i) local[rv.vertices[i]] = static_cast<int>(i);
  ResidueGraph out{ColoredGraph::dipole_graph(1), rv.colors.colors(), rv.vertices};
  std::vector<std::vector<Vertex>> table;
  for (Color c : out.color_labels) {
    std::vector<Vertex> m(rv.vertices.size());
    for (std::size_t i = 0; i < rv.vertices.size(); ++i) m[i] = local[g.neighbor(rv.vertices[i], c)];
    table.push_back(std::move(m));
  }
  out.graph = ColoredGraph(rv.colors.size() - 1, std::move(table));
  return out;
}

ResidueLattice::ResidueLattice(const ColoredGraph& g)
    : graph_(g), num_colors_(g.num_colors()), order_(g.order()) {
  if (g.dimension() > kMaxDimension) {
    throw std::invalid_argument("residue lattice supports dimension up to " +
                                std::to_string(kMaxDimension));
  }
  const std::uint32_t masks = 1u << num_colors_;
  label_.resize(static_cast<std::size_t>(masks) * order_);
  offset_.assign(masks + 1, 0);
  by_size_.assign(num_colors_ + 1, 0);
  std::vector<Vertex> stack;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const ColorSet cs{mask};
    std::span<int> label(label_.data() + static_cast<std::size_t>(mask) * order_, order_);
    const int count = label_components(g, cs, label, stack);
    offset_[mask + 1] = offset_[mask] + count;
    by_size_[cs.size()] += count;
    int seen = 0;
    for (Vertex v = 0; v < order_ && seen < count; ++v) {
      if (label[v] == seen) {
        colors_.push_back(cs);
        min_vertex_.push_back(v);
        ++seen;
      }
    }
  }
}

std::vector<Vertex> ResidueLattice::vertices(int residue) const {
  const ColorSet cs = colors_[residue];
  const int local = residue - offset_[cs.bits()];
  const int* label = label_.data() + static_cast<std::size_t>(cs.bits()) * order_;
  std::vector<Vertex> out;
  for (Vertex v = min_vertex_[residue]; v < order_; ++v) {
    if (label[v] == local) out.push_back(v);
  }
  return out;
}

ResidueView ResidueLattice::view(int residue) const {
  return ResidueView{&graph_, colors_[residue], vertices(residue)};
}

std::vector<int> ResidueLattice::covers_up(int residue) const {
  std::vector<int> out;
  const ColorSet cs = colors_[residue];
  for (Color c = 0; c < num_colors_; ++c) {
    if (!cs.contains(c)) out.push_back(index_of(cs.with(c), min_vertex_[residue]));
  }
  return out;
}

std::vector<int> ResidueLattice::covers_down(int residue) const {
  std::vector<int> out;
  const ColorSet cs = colors_[residue];
  const auto verts = vertices(residue);
  for (Color c : cs.colors()) {
    const ColorSet sub = cs.without(c);
    const std::size_t first = out.size();
    for (Vertex v : verts) {
      const int r = index_of(sub, v);
      if (std::find(out.begin() + first, out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin() + first, out.end());
  }
  return out;
}

bool ResidueLattice::contains(int outer, int inner) const {
  return colors_[inner].is_subset_of(colors_[outer]) &&
         index_of(colors_[outer], min_vertex_[inner]) == outer;
}

bool is_supercontracted(const ColoredGraph& g) {
  std::vector<int> label(g.order());
  std::vector<Vertex> stack;
  for (Color c = 0; c < g.num_colors(); ++c) {
    if (label_components(g, g.all_colors().without(c), label, stack) != 1) return false;
  }
  return true;
}

}  // namespace gemkit
