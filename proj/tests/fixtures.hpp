#pragma once

#include <random>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace fixtures {

using gemkit::ColoredGraph;

ColoredGraph k2(int n);
/// Torus, n = 2: color c joins i and 3 + ((i + c) mod 3).
ColoredGraph t6();
/// n = 4, order 4: colors 0,1 on A = (01)(23), colors 2,3,4 on B = (03)(12).
ColoredGraph q4();
/// Same multiset as q4 with A on colors 0 and 2.
ColoredGraph q4_spread();
/// A on color 0 only; not supercontracted.
ColoredGraph q4_split();
/// Non-bipartite supercontracted order-4 graphs, A/C/B multiplicities 3,1,1 and 2,2,1.
ColoredGraph nonbip4_a();
ColoredGraph nonbip4_b();
ColoredGraph sigma1_t6();
/// Σ₂(Σ₁(T6)).
ColoredGraph f_tb();
/// n = 3, order 8: color c joins i and 4 + (i xor c).
ColoredGraph rp3();
/// Two copies of T6 joined by color 3 (i to i + 6).
ColoredGraph doubled_t6();

/// Uniform random matchings, redrawn until connected.
ColoredGraph random_graph(int n, int order, std::mt19937_64& rng);
std::vector<gemkit::Vertex> random_permutation(int size, std::mt19937_64& rng);

struct Named {
  std::string name;
  ColoredGraph graph;
};
std::vector<Named> all();

}  // namespace fixtures
