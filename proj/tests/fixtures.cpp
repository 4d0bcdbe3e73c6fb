#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "gemkit/moves.hpp"

namespace fixtures {

using gemkit::Vertex;

namespace {

std::vector<Vertex> pairs(std::initializer_list<std::pair<Vertex, Vertex>> ps, int order) {
  std::vector<Vertex> m(order, -1);
  for (auto [a, b] : ps) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

const auto A = pairs({{0, 1}, {2, 3}}, 4);
const auto B = pairs({{0, 3}, {1, 2}}, 4);
const auto C = pairs({{0, 2}, {1, 3}}, 4);

}  // namespace

ColoredGraph k2(int n) { return ColoredGraph::dipole_graph(n); }

ColoredGraph t6() {
  std::vector<std::vector<Vertex>> table;
  for (int c = 0; c < 3; ++c) {
    std::vector<Vertex> m(6);
    for (int i = 0; i < 3; ++i) {
      m[i] = 3 + (i + c) % 3;
      m[3 + (i + c) % 3] = i;
    }
    table.push_back(m);
  }
  return ColoredGraph(2, table);
}

ColoredGraph q4() { return ColoredGraph(4, {A, A, B, B, B}); }
ColoredGraph q4_spread() { return ColoredGraph(4, {A, B, A, B, B}); }
ColoredGraph q4_split() { return ColoredGraph(4, {A, B, B, B, B}); }
ColoredGraph nonbip4_a() { return ColoredGraph(4, {A, A, A, C, B}); }
ColoredGraph nonbip4_b() { return ColoredGraph(4, {A, A, C, C, B}); }

ColoredGraph sigma1_t6() { return gemkit::suspend(t6(), 1); }
ColoredGraph f_tb() { return gemkit::suspend(sigma1_t6(), 2); }

ColoredGraph rp3() {
  std::vector<std::vector<Vertex>> table;
  for (int c = 0; c < 4; ++c) {
    std::vector<Vertex> m(8);
    for (int i = 0; i < 4; ++i) {
      m[i] = 4 + (i ^ c);
      m[4 + (i ^ c)] = i;
    }
    table.push_back(m);
  }
  return ColoredGraph(3, table);
}

ColoredGraph doubled_t6() {
  const auto t = t6();
  std::vector<std::vector<Vertex>> table(4, std::vector<Vertex>(12));
  for (int c = 0; c < 3; ++c) {
    for (Vertex v = 0; v < 6; ++v) {
      table[c][v] = t.neighbor(v, c);
      table[c][v + 6] = t.neighbor(v, c) + 6;
    }
  }
  for (Vertex v = 0; v < 6; ++v) {
    table[3][v] = v + 6;
    table[3][v + 6] = v;
  }
  return ColoredGraph(3, table);
}

std::vector<Vertex> random_permutation(int size, std::mt19937_64& rng) {
  std::vector<Vertex> p(size);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ColoredGraph random_graph(int n, int order, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<Vertex>> table;
    for (int c = 0; c <= n; ++c) {
      const auto p = random_permutation(order, rng);
      std::vector<Vertex> m(order);
      for (int i = 0; i < order; i += 2) {
        m[p[i]] = p[i + 1];
        m[p[i + 1]] = p[i];
      }
      table.push_back(m);
    }
    if (gemkit::count_components(table, order) == 1) return ColoredGraph(n, table);
  }
}

std::vector<Named> all() {
  return {{"K2(1)", k2(1)},         {"K2(2)", k2(2)},         {"K2(3)", k2(3)},
          {"K2(4)", k2(4)},         {"K2(5)", k2(5)},         {"T6", t6()},
          {"Q4", q4()},             {"Q4'", q4_spread()},     {"Q4 split", q4_split()},
          {"nonbip A", nonbip4_a()}, {"nonbip B", nonbip4_b()}, {"S1(T6)", sigma1_t6()},
          {"F_TB", f_tb()},         {"RP3", rp3()},           {"2xT6", doubled_t6()}};
}

}  // namespace fixtures
