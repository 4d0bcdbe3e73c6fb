#include "gemkit/moves.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gemkit {

const char* to_string(DipoleKind k) {
  switch (k) {
    case DipoleKind::Ordinary: return "ordinary";
    case DipoleKind::Singular: return "singular";
    case DipoleKind::Unresolved: return "unresolved";
  }
  return "unresolved";
}

const char* to_string(Properness p) {
  switch (p) {
    case Properness::Proper: return "proper";
    case Properness::NotProper: return "not-proper";
    case Properness::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool connected_within(const ColoredGraph& g, ColorSet colors, Vertex from, Vertex to) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  const auto cs = colors.colors();
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (Color c : cs) {
      const Vertex w = g.neighbor(v, c);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

void check_vertex(const ColoredGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw MoveError(MoveError::Kind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }
}

void check_color(const ColoredGraph& g, Color c) {
  if (c < 0 || c >= g.num_colors()) {
    throw MoveError(MoveError::Kind::InvalidColor, "color " + std::to_string(c) + " out of range");
  }
}

}  // namespace

std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return std::nullopt;
  const ColorSet colors = g.colors_between(u, v);
  if (colors.empty() || colors == g.all_colors()) return std::nullopt;
  if (connected_within(g, colors.complement(g.num_colors()), u, v)) return std::nullopt;
  return Dipole{std::min(u, v), std::max(u, v), colors};
}

std::vector<Dipole> dipole_candidates(const ColoredGraph& g) {
  std::vector<Dipole> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<Vertex> partners;
    for (Color c = 0; c < g.num_colors(); ++c) {
      const Vertex w = g.neighbor(u, c);
      if (w > u) partners.push_back(w);
    }
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    for (Vertex w : partners) {
      if (auto d = dipole_at(g, u, w)) out.push_back(*d);
    }
  }
  return out;
}

void label_dipole(const Classification& cls, Dipole& d) {
  const int k = cls.graph().num_colors();
  const ColorSet hat = d.colors.complement(k);
  const auto a = cls.class_of(hat, d.first);
  const auto b = cls.class_of(hat, d.second);
  if (a == ResidueClass::Ordinary || b == ResidueClass::Ordinary) {
    d.kind = DipoleKind::Ordinary;
    d.properness = Properness::Proper;
    return;
  }
  if (a == ResidueClass::Unknown || b == ResidueClass::Unknown) {
    d.kind = DipoleKind::Unresolved;
    d.properness = Properness::Unknown;
    return;
  }
  d.kind = DipoleKind::Singular;
  // Not proper when every proper subset of the complement has an ordinary
  // residue at one of the two ends.
  bool hypothesis = true;
  const std::uint32_t full = hat.bits();
  for (std::uint32_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
    const ColorSet s{sub};
    if (cls.class_of(s, d.first) != ResidueClass::Ordinary &&
        cls.class_of(s, d.second) != ResidueClass::Ordinary) {
      hypothesis = false;
      break;
    }
    if (sub == 0) break;
  }
  if (hypothesis || is_singular_manifold(cls) == TriBool::True) {
    d.properness = Properness::NotProper;
  } else {
    d.properness = Properness::Unknown;
  }
}

std::vector<Dipole> find_dipoles(const Classification& cls) {
  auto out = dipole_candidates(cls.graph());
  for (auto& d : out) label_dipole(cls, d);
  return out;
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) { return find_dipoles(Classification(g)); }

ColoredGraph add_dipole(const ColoredGraph& g, const DipoleInsertion& ins) {
  const int k = g.num_colors();
  const ColorSet hat = ins.colors.complement(k);
  if (ins.colors.empty() || hat.empty() || !ins.colors.is_subset_of(g.all_colors())) {
    throw MoveError(MoveError::Kind::InvalidColor,
                    "dipole colors " + ins.colors.to_string() + " must be a nonempty proper subset");
  }
  ColorSet covered;
  for (const auto& e : ins.edges) {
    check_color(g, e.color);
    check_vertex(g, e.toward_first);
    check_vertex(g, e.toward_second);
    if (!hat.contains(e.color) || covered.contains(e.color)) {
      throw MoveError(MoveError::Kind::InvalidColor,
                      "hanging edge colors must list " + hat.to_string() + " once each");
    }
    if (g.neighbor(e.toward_first, e.color) != e.toward_second) {
      throw MoveError(MoveError::Kind::InvalidVertex,
                      std::to_string(e.toward_first) + "-" + std::to_string(e.toward_second) +
                          " is not a " + std::to_string(e.color) + "-edge");
    }
    covered = covered.with(e.color);
  }
  if (covered != hat) {
    throw MoveError(MoveError::Kind::InvalidColor,
                    "hanging edge colors must list " + hat.to_string() + " once each");
  }

  const int order = g.order() + 2;
  Vertex x = g.order();
  Vertex y = g.order() + 1;
  if (ins.positions) {
    std::tie(x, y) = *ins.positions;
    if (x == y || x < 0 || y < 0 || x >= order || y >= order) {
      throw MoveError(MoveError::Kind::InvalidVertex, "invalid positions for the new vertices");
    }
  }
  const Vertex lo = std::min(x, y);
  const Vertex hi = std::max(x, y);
  auto nid = [&](Vertex v) {
    if (v >= lo) ++v;
    if (v >= hi) ++v;
    return v;
  };
  std::vector<std::vector<Vertex>> table(k, std::vector<Vertex>(order, -1));
  for (Color c = 0; c < k; ++c) {
    for (Vertex v = 0; v < g.order(); ++v) table[c][nid(v)] = nid(g.neighbor(v, c));
  }
  for (Color c : ins.colors.colors()) {
    table[c][x] = y;
    table[c][y] = x;
  }
  for (const auto& e : ins.edges) {
    const Vertex a = nid(e.toward_first);
    const Vertex b = nid(e.toward_second);
    table[e.color][x] = a;
    table[e.color][a] = x;
    table[e.color][y] = b;
    table[e.color][b] = y;
  }
  ColoredGraph out(g.dimension(), std::move(table));
  const auto d = dipole_at(out, x, y);
  if (!d || d->colors != ins.colors) {
    throw MoveError(MoveError::Kind::NotADipole, "inserted pair is not a dipole");
  }
  return out;
}

ColoredGraph add_dipole_at(const ColoredGraph& g, Vertex v, ColorSet colors, DipoleSide side) {
  check_vertex(g, v);
  DipoleInsertion ins;
  ins.colors = colors;
  for (Color c : colors.complement(g.num_colors()).colors()) {
    const Vertex w = g.neighbor(v, c);
    ins.edges.push_back(side == DipoleSide::First ? HangingEdge{c, v, w} : HangingEdge{c, w, v});
  }
  return add_dipole(g, ins);
}

Cancellation cancel_dipole_with_inverse(const ColoredGraph& g, const Dipole& d) {
  if (g.order() == 2) {
    throw MoveError(MoveError::Kind::WouldAnnihilate, "cannot cancel a dipole of an order-2 graph");
  }
  const auto check = dipole_at(g, d.first, d.second);
  if (!check || check->colors != d.colors) {
    throw MoveError(MoveError::Kind::NotADipole,
                    std::to_string(d.first) + "," + std::to_string(d.second) + " with colors " +
                        d.colors.to_string() + " is not a dipole");
  }
  const Vertex u = d.first;
  const Vertex w = d.second;
  auto nid = [&](Vertex v) { return v - (v > u ? 1 : 0) - (v > w ? 1 : 0); };
  const int k = g.num_colors();
  const int order = g.order() - 2;
  std::vector<std::vector<Vertex>> table(k, std::vector<Vertex>(order, -1));
  DipoleInsertion inverse;
  inverse.colors = d.colors;
  inverse.positions = std::pair{u, w};
  for (Color c = 0; c < k; ++c) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == u || v == w) continue;
      const Vertex x = g.neighbor(v, c);
      if (x != u && x != w) table[c][nid(v)] = nid(x);
    }
    if (!d.colors.contains(c)) {
      const Vertex a = nid(g.neighbor(u, c));
      const Vertex b = nid(g.neighbor(w, c));
      table[c][a] = b;
      table[c][b] = a;
      inverse.edges.push_back({c, a, b});
    }
  }
  return {ColoredGraph(g.dimension(), std::move(table)), std::move(inverse)};
}

ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d) {
  return cancel_dipole_with_inverse(g, d).graph;
}

ColoredGraph suspend(const ColoredGraph& g, Color c) {
  check_color(g, c);
  auto table = g.matchings();
  table.push_back(table[c]);
  return ColoredGraph(g.dimension() + 1, std::move(table));
}

ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2) {
  if (g1.dimension() != g2.dimension()) {
    throw MoveError(MoveError::Kind::DimensionMismatch, "connected sum needs equal dimensions");
  }
  check_vertex(g1, v1);
  check_vertex(g2, v2);
  const int n1 = g1.order() - 1;
  auto id1 = [&](Vertex v) { return v - (v > v1 ? 1 : 0); };
  auto id2 = [&](Vertex v) { return n1 + v - (v > v2 ? 1 : 0); };
  const int order = g1.order() + g2.order() - 2;
  std::vector<std::vector<Vertex>> table(g1.num_colors(), std::vector<Vertex>(order, -1));
  for (Color c = 0; c < g1.num_colors(); ++c) {
    for (Vertex v = 0; v < g1.order(); ++v) {
      const Vertex w = g1.neighbor(v, c);
      if (v != v1 && w != v1) table[c][id1(v)] = id1(w);
    }
    for (Vertex v = 0; v < g2.order(); ++v) {
      const Vertex w = g2.neighbor(v, c);
      if (v != v2 && w != v2) table[c][id2(v)] = id2(w);
    }
    const Vertex a = id1(g1.neighbor(v1, c));
    const Vertex b = id2(g2.neighbor(v2, c));
    table[c][a] = b;
    table[c][b] = a;
  }
  return ColoredGraph(g1.dimension(), std::move(table));
}

VertexIndex vertex_index(const Classification& cls, Vertex v) {
  const auto& g = cls.graph();
  check_vertex(g, v);
  VertexIndex out{v, 0};
  for (Color c = 0; c < g.num_colors(); ++c) {
    const ColorSet hat = g.all_colors().without(c);
    const int r = cls.lattice().index_of(hat, v);
    if (cls[r] == ResidueClass::Unknown) throw UnresolvedResidue(cls.lattice().id(r));
    if (cls[r] == ResidueClass::Singular) ++out.index;
  }
  return out;
}

VertexIndex vertex_index(const ColoredGraph& g, Vertex v) {
  return vertex_index(Classification(g), v);
}

ColoredGraph internalize(const ColoredGraph& g) {
  ColoredGraph cur = g;
  for (int step = 0; step <= g.num_colors(); ++step) {
    const Classification cls(cur);
    Vertex best = -1;
    int best_index = 0;
    for (Vertex v = 0; v < cur.order(); ++v) {
      const int index = vertex_index(cls, v).index;
      if (index == 0) return cur;
      if (best < 0 || index < best_index) {
        best = v;
        best_index = index;
      }
    }
    Color c = 0;
    while (cls.class_of(cur.all_colors().without(c), best) != ResidueClass::Singular) ++c;
    cur = add_dipole_at(cur, best, cur.all_colors().without(c));
  }
  // Each step lowers the least positive index by one, so this is unreachable.
  throw std::logic_error("internalize did not converge");
}

namespace {

const Dipole* pick(const std::vector<Dipole>& ds, SimplifyPolicy policy) {
  const Dipole* best = nullptr;
  for (const auto& d : ds) {
    if (d.kind != DipoleKind::Ordinary) continue;
    if (!best) {
      best = &d;
      continue;
    }
    const bool better = policy == SimplifyPolicy::LargestFirst ? d.h() > best->h() : d.h() < best->h();
    if (better) best = &d;
  }
  return best;
}

}  // namespace

SimplifyResult simplify(const ColoredGraph& g, const SimplifyOptions& options) {
  SimplifyResult out{g, {}, true};
  const int limit = options.step_factor * g.order();
  const int n = g.dimension();
  while (out.graph.order() > 2) {
    if (static_cast<int>(out.trace.size()) >= limit) {
      out.complete = false;
      break;
    }
    auto ds = dipole_candidates(out.graph);
    if (ds.empty()) break;
    // n- and (n-1)-dipoles are ordinary whatever the residues look like.
    for (auto& d : ds) {
      if (d.h() >= n - 1) {
        d.kind = DipoleKind::Ordinary;
        d.properness = Properness::Proper;
      }
    }
    const Dipole* chosen = options.policy == SimplifyPolicy::LargestFirst ? pick(ds, options.policy) : nullptr;
    if (!chosen) {
      const Classification cls(out.graph);
      for (auto& d : ds) label_dipole(cls, d);
      chosen = pick(ds, options.policy);
      if (!chosen) {
        out.complete = std::none_of(ds.begin(), ds.end(), [](const Dipole& d) {
          return d.kind == DipoleKind::Unresolved;
        });
        break;
      }
    }
    const Dipole d = *chosen;
    out.graph = cancel_dipole(out.graph, d);
    out.trace.push_back(d);
  }
  return out;
}

ColoredGraph inflate(const ColoredGraph& g, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ColoredGraph cur = g;
  const int colors = g.num_colors();
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int step = 0; step < k; ++step) {
    const int h = uniform(1, g.dimension());
    std::vector<Color> all(colors);
    for (Color c = 0; c < colors; ++c) all[c] = c;
    std::shuffle(all.begin(), all.end(), rng);
    ColorSet dipole_colors;
    for (int i = 0; i < h; ++i) dipole_colors = dipole_colors.with(all[i]);

    if (uniform(0, 1) == 0) {
      DipoleInsertion ins;
      ins.colors = dipole_colors;
      for (Color c : dipole_colors.complement(colors).colors()) {
        const Vertex a = uniform(0, cur.order() - 1);
        const Vertex b = cur.neighbor(a, c);
        ins.edges.push_back(uniform(0, 1) ? HangingEdge{c, a, b} : HangingEdge{c, b, a});
      }
      try {
        ColoredGraph next = add_dipole(cur, ins);
        Dipole d{cur.order(), cur.order() + 1, dipole_colors};
        label_dipole(Classification(next), d);
        if (d.kind == DipoleKind::Ordinary) {
          cur = std::move(next);
          continue;
        }
      } catch (const MoveError&) {
      }
    }
    const auto side = uniform(0, 1) ? DipoleSide::First : DipoleSide::Second;
    cur = add_dipole_at(cur, uniform(0, cur.order() - 1), dipole_colors, side);
  }
  return cur;
}

}  // namespace gemkit
