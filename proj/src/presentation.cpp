#include "gemkit/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gemkit/union_find.hpp"

namespace gemkit {

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (auto t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw std::overflow_error("integer overflow in Smith normal form");
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> elementary_divisors(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (!found || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      return found;
    };
    std::size_t pr = t, pc = t;
    if (!find_pivot(pr, pc)) break;
    for (;;) {
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub_mul(m[i][j], q, m[t][j]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub_mul(m[i][j], q, m[i][t]);
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility by folding an offending row into the pivot row.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad == rows) break;
        for (std::size_t j = t; j < cols; ++j) m[t][j] = checked_sub_mul(m[t][j], -1, m[bad][j]);
      }
      pr = t;
      pc = t;
      for (std::size_t i = t; i < rows; ++i) {
        if (m[i][t] != 0 && std::llabs(m[i][t]) < std::llabs(m[pr][pc])) {
          pr = i;
          pc = t;
        }
      }
      for (std::size_t j = t; j < cols; ++j) {
        if (m[t][j] != 0 && std::llabs(m[t][j]) < std::llabs(m[pr][pc])) {
          pr = t;
          pc = j;
        }
      }
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

AbelianInvariants cokernel(const IntMatrix& m, int cols) {
  const auto diag = elementary_divisors(m);
  AbelianInvariants out;
  out.free_rank = cols - static_cast<int>(diag.size());
  for (auto d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

AbelianInvariants homology_h1(const GroupPresentation& pres) {
  const int cols = static_cast<int>(pres.generators.size());
  IntMatrix m;
  for (const auto& word : pres.relators) {
    std::vector<std::int64_t> row(cols, 0);
    for (const auto& letter : word) row[letter.generator] += letter.exponent;
    m.push_back(std::move(row));
  }
  for (int k : pres.extra_killed) {
    std::vector<std::int64_t> row(cols, 0);
    row[k] = 1;
    m.push_back(std::move(row));
  }
  return cokernel(m, cols);
}

namespace {

// Edge numbering for one color: index of the edge {v, m_c[v]} among the
// color's edges sorted by smaller endpoint.
std::vector<int> edge_numbers(const ColoredGraph& g, Color c) {
  std::vector<int> number(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = g.neighbor(v, c);
    if (v < w) {
      number[v] = next;
      number[w] = next;
      ++next;
    }
  }
  return number;
}

std::vector<std::string> labels(int count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

Letter traverse(Vertex from, Vertex to, int generator) {
  return {generator, from < to ? 1 : -1};
}

}  // namespace

GroupPresentation c_group_presentation(const ColoredGraph& g, Color c) {
  if (c < 0 || c >= g.num_colors()) {
    throw std::out_of_range("color " + std::to_string(c) + " out of range");
  }
  const auto number = edge_numbers(g, c);
  GroupPresentation pres;
  pres.generators = labels(g.half_order());
  for (Color i = 0; i < g.num_colors(); ++i) {
    if (i == c) continue;
    std::vector<char> seen(g.order(), 0);
    for (Vertex start = 0; start < g.order(); ++start) {
      if (seen[start]) continue;
      Word word;
      Vertex v = start;
      do {
        const Vertex w = g.neighbor(v, c);
        word.push_back(traverse(v, w, number[v]));
        seen[v] = seen[w] = 1;
        v = g.neighbor(w, i);
      } while (v != start);
      pres.relators.push_back(std::move(word));
    }
  }
  return pres;
}

GroupPresentation full_presentation(const ColoredGraph& g) {
  const int p = g.half_order();
  std::vector<std::vector<int>> number;
  for (Color c = 0; c < g.num_colors(); ++c) number.push_back(edge_numbers(g, c));
  auto edge_id = [&](Color c, Vertex v) { return c * p + number[c][v]; };

  GroupPresentation pres;
  pres.generators = labels(g.num_colors() * p);
  if (g.dimension() >= 2) {
    for (Color i = 0; i < g.num_colors(); ++i) {
      for (Color j = i + 1; j < g.num_colors(); ++j) {
        std::vector<char> seen(g.order(), 0);
        for (Vertex start = 0; start < g.order(); ++start) {
          if (seen[start]) continue;
          Word word;
          Vertex v = start;
          do {
            const Vertex w = g.neighbor(v, i);
            word.push_back(traverse(v, w, edge_id(i, v)));
            const Vertex x = g.neighbor(w, j);
            word.push_back(traverse(w, x, edge_id(j, w)));
            seen[v] = seen[w] = 1;
            v = x;
          } while (v != start);
          pres.relators.push_back(std::move(word));
        }
      }
    }
  }
  UnionFind uf(g.order());
  for (Color c = 0; c < g.num_colors(); ++c) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex w = g.neighbor(v, c);
      if (v < w && uf.unite(v, w)) pres.extra_killed.push_back(edge_id(c, v));
    }
  }
  return pres;
}

std::string to_text(const GroupPresentation& pres) {
  std::ostringstream out;
  for (const auto& label : pres.generators) out << "gen " << label << '\n';
  auto word_text = [&](const Word& word) {
    std::string s;
    for (const auto& letter : word) {
      if (!s.empty()) s += ' ';
      s += pres.generators[letter.generator];
      if (letter.exponent != 1) s += "^" + std::to_string(letter.exponent);
    }
    return s;
  };
  for (const auto& word : pres.relators) out << "rel " << word_text(word) << '\n';
  for (int k : pres.extra_killed) out << "rel " << pres.generators[k] << '\n';
  return out.str();
}

}  // namespace gemkit
