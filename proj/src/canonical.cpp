#include "gemkit/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gemkit/union_find.hpp"

namespace gemkit {

const char* to_string(Equivalence eq) {
  return eq == Equivalence::ColorPreserving ? "color-preserving" : "color-permuting";
}

Equivalence parse_equivalence(std::string_view text) {
  if (text == "color-preserving") return Equivalence::ColorPreserving;
  if (text == "color-permuting") return Equivalence::ColorPermuting;
  throw std::invalid_argument("unknown equivalence '" + std::string(text) + "'");
}

namespace {

using Code = std::vector<std::uint16_t>;

struct Component {
  std::vector<Vertex> vertices;
};

class Canonizer {
 public:
  Canonizer(std::span<const std::vector<Vertex>> matchings, int order)
      : matchings_(matchings), label_(order, -1), queue_(order) {
    if (order > 0xffff) throw std::invalid_argument("order too large for canonical codes");
    UnionFind uf(order);
    for (const auto& m : matchings) {
      for (Vertex v = 0; v < order; ++v) uf.unite(v, m[v]);
    }
    std::vector<int> index(order, -1);
    for (Vertex v = 0; v < order; ++v) {
      const int root = uf.find(v);
      if (index[root] < 0) {
        index[root] = static_cast<int>(components_.size());
        components_.emplace_back();
      }
      components_[index[root]].vertices.push_back(v);
    }
  }

  const std::vector<Component>& components() const { return components_; }

  // Breadth-first code from `start` under `colors`. With `bound` set, returns
  // true only if the code is strictly smaller, giving up as soon as it cannot be.
  bool code_from(Vertex start, std::span<const Color> colors, const Code* bound, Code& out) {
    const std::size_t size = out.size();
    std::size_t pos = 0;
    bool comparing = bound != nullptr;
    int next = 0;
    int head = 0;
    int tail = 0;
    queue_[tail++] = start;
    label_[start] = next++;
    bool ok = true;
    while (head < tail && ok) {
      const Vertex u = queue_[head++];
      for (Color c : colors) {
        const Vertex w = matchings_[c][u];
        if (label_[w] < 0) {
          label_[w] = next++;
          queue_[tail++] = w;
        }
        const auto value = static_cast<std::uint16_t>(label_[w]);
        if (comparing) {
          if (value > (*bound)[pos]) {
            ok = false;
            break;
          }
          if (value < (*bound)[pos]) comparing = false;
        }
        if (pos < size) out[pos] = value;
        ++pos;
      }
    }
    for (int i = 0; i < tail; ++i) label_[queue_[i]] = -1;
    // Still comparing at the end means the code equals the bound.
    return ok && !comparing;
  }

  std::vector<Vertex> bfs_order(Vertex start, std::span<const Color> colors) {
    std::vector<Vertex> order;
    int head = 0;
    order.push_back(start);
    label_[start] = 0;
    while (head < static_cast<int>(order.size())) {
      const Vertex u = order[head++];
      for (Color c : colors) {
        const Vertex w = matchings_[c][u];
        if (label_[w] < 0) {
          label_[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
    for (Vertex v : order) label_[v] = -1;
    return order;
  }

 private:
  std::span<const std::vector<Vertex>> matchings_;
  std::vector<int> label_;
  std::vector<Vertex> queue_;
  std::vector<Component> components_;
};

struct ComponentBest {
  Code code;
  Vertex start = -1;
  std::size_t component = 0;
};

void append_u16(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::vector<Vertex>> matchings, int order,
                                     Equivalence eq) {
  const int k = static_cast<int>(matchings.size());
  Canonizer canon(matchings, order);
  const auto& comps = canon.components();

  std::vector<Color> colors(k);
  std::iota(colors.begin(), colors.end(), 0);

  std::string best_bytes;
  std::vector<Color> best_colors;
  std::vector<ComponentBest> best_parts;
  bool have_best = false;

  do {
    std::vector<ComponentBest> parts;
    parts.reserve(comps.size());
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const auto& comp = comps[ci];
      ComponentBest part;
      part.component = ci;
      part.code.assign(comp.vertices.size() * k, 0);
      Code scratch(part.code.size());
      for (Vertex s : comp.vertices) {
        if (part.start < 0) {
          canon.code_from(s, colors, nullptr, part.code);
          part.start = s;
        } else if (canon.code_from(s, colors, &part.code, scratch)) {
          part.code.swap(scratch);
          part.start = s;
        }
      }
      parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end(), [](const ComponentBest& a, const ComponentBest& b) {
      if (a.code.size() != b.code.size()) return a.code.size() < b.code.size();
      return a.code < b.code;
    });
    std::string bytes;
    append_u16(bytes, static_cast<std::uint32_t>(k));
    append_u16(bytes, static_cast<std::uint32_t>(order));
    append_u16(bytes, static_cast<std::uint32_t>(parts.size()));
    for (const auto& part : parts) {
      append_u16(bytes, static_cast<std::uint32_t>(part.code.size() / std::max(k, 1)));
      for (auto value : part.code) append_u16(bytes, value);
    }
    if (!have_best || bytes < best_bytes) {
      best_bytes = std::move(bytes);
      best_colors = colors;
      best_parts = std::move(parts);
      have_best = true;
    }
  } while (eq == Equivalence::ColorPermuting && std::next_permutation(colors.begin(), colors.end()));

  CanonicalLabeling result;
  result.code = CanonicalCode{eq, std::move(best_bytes)};
  result.color_order = best_colors;
  result.vertex_perm.assign(order, -1);
  int offset = 0;
  for (const auto& part : best_parts) {
    const auto bfs = canon.bfs_order(part.start, best_colors);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      result.vertex_perm[bfs[i]] = offset + static_cast<Vertex>(i);
    }
    offset += static_cast<int>(bfs.size());
  }
  result.table.assign(k, std::vector<Vertex>(order));
  for (int c = 0; c < k; ++c) {
    const auto& m = matchings[best_colors[c]];
    for (Vertex v = 0; v < order; ++v) {
      result.table[c][result.vertex_perm[v]] = result.vertex_perm[m[v]];
    }
  }
  return result;
}

CanonicalCode canonical_form(const ColoredGraph& g, Equivalence eq) {
  const auto table = g.matchings();
  return canonical_labeling(table, g.order(), eq).code;
}

ColoredGraph canonical_representative(const ColoredGraph& g, Equivalence eq) {
  const auto table = g.matchings();
  auto labeling = canonical_labeling(table, g.order(), eq);
  return ColoredGraph(g.dimension(), std::move(labeling.table));
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, Equivalence eq) {
  if (a.dimension() != b.dimension() || a.order() != b.order()) return false;
  return canonical_form(a, eq) == canonical_form(b, eq);
}

}  // namespace gemkit
