#pragma once

// Deliberately naive reference computations for cross-checking the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace oracle {

using gemkit::ColoredGraph;
using gemkit::Vertex;

/// Components of the subgraph on the colors in `mask`, by plain BFS.
inline int components(const ColoredGraph& g, std::uint32_t mask) {
  std::vector<int> seen(g.order(), 0);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int c = 0; c < g.num_colors(); ++c) {
        if (!((mask >> c) & 1u)) continue;
        const Vertex w = g.neighbor(queue[i], c);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return count;
}

inline bool same_component(const ColoredGraph& g, std::uint32_t mask, Vertex a, Vertex b) {
  std::vector<int> seen(g.order(), 0);
  std::vector<Vertex> queue{a};
  seen[a] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int c = 0; c < g.num_colors(); ++c) {
      const Vertex w = g.neighbor(queue[i], c);
      if (((mask >> c) & 1u) && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen[b] == 1;
}

/// |R_h| summed over all color subsets of size h.
inline long residues_of_size(const ColoredGraph& g, int h) {
  long total = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_colors()); ++mask) {
    if (__builtin_popcount(mask) == h) total += components(g, mask);
  }
  return total;
}

/// Breadth-first 2-coloring; empty when an odd cycle exists.
inline std::vector<int> two_coloring(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  side[0] = 0;
  std::vector<Vertex> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex v = queue[i];
    for (int c = 0; c < g.num_colors(); ++c) {
      const Vertex w = g.neighbor(v, c);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return {};
      }
    }
  }
  return side;
}

/// Tries every vertex bijection (and every color bijection if asked).
inline bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, bool permute_colors) {
  if (a.order() != b.order() || a.num_colors() != b.num_colors()) return false;
  std::vector<int> colors(a.num_colors());
  std::iota(colors.begin(), colors.end(), 0);
  do {
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int c = 0; c < a.num_colors() && ok; ++c) {
        for (Vertex v = 0; v < a.order() && ok; ++v) {
          ok = perm[a.neighbor(v, c)] == b.neighbor(perm[v], colors[c]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (permute_colors && std::next_permutation(colors.begin(), colors.end()));
  return false;
}

/// Exact determinant by fraction-free elimination.
inline __int128 determinant(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} where
/// D_k is the gcd of all k×k minors.
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::int64_t> out;
  __int128 previous = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    __int128 g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<__int128>> minor(k, std::vector<__int128>(k));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        }
        g = gcd128(g, determinant(minor));
      }
    }
    if (g == 0) break;
    out.push_back(static_cast<std::int64_t>(g / previous));
    previous = g;
  }
  return out;
}

// 2 - χ of the surface of the regular embedding for cyclic order eps.
inline long twice_genus(const ColoredGraph& g, const std::vector<int>& eps) {
  long faces = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const int a = eps[i], b = eps[(i + 1) % eps.size()];
    faces += components(g, (1u << a) | (1u << b));
  }
  const long chi = g.order() - static_cast<long>(g.num_colors()) * g.half_order() + faces;
  return 2 - chi;
}

inline std::vector<std::vector<int>> cyclic_orders(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> rest(k - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (k > 2 && rest.front() > rest.back()) continue;
    std::vector<int> eps{0};
    eps.insert(eps.end(), rest.begin(), rest.end());
    out.push_back(eps);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace oracle
