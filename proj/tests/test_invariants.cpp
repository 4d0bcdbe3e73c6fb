#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/moves.hpp"
#include "oracles.hpp"

using namespace gemkit;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng) {
  const int rows = 1 + static_cast<int>(rng() % 8);
  const int cols = 1 + static_cast<int>(rng() % 8);
  IntMatrix m(rows, std::vector<std::int64_t>(cols));
  const int spread = 1 + static_cast<int>(rng() % 6);
  for (auto& row : m) {
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
  }
  return m;
}

}  // namespace

TEST_CASE("elementary divisors match determinantal divisors") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(rng);
    CHECK(elementary_divisors(m) == oracle::invariant_factors(m));
  }
  CHECK(elementary_divisors({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
  CHECK(elementary_divisors({{0, 0}}).empty());
}

TEST_CASE("cokernel formatting") {
  CHECK(cokernel({{2, 0, 0}}, 3).to_string() == "Z^2 + Z/2");
  CHECK(cokernel({}, 1).to_string() == "Z");
  CHECK(cokernel({{1}}, 1).to_string() == "0");
  CHECK(cokernel({{2, 0}, {0, 4}}, 2).torsion == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("abelianization ignores Tietze noise") {
  std::mt19937_64 rng(52);
  const std::vector<ColoredGraph> graphs = {fixtures::rp3(), fixtures::t6(), fixtures::f_tb(),
                                            fixtures::nonbip4_a(), fixtures::k2(3)};
  for (const auto& g : graphs) {
    const auto pres = full_presentation(g);
    const auto base = homology_h1(pres);
    for (int trial = 0; trial < 20; ++trial) {
      auto noisy = pres;
      const int gens = static_cast<int>(noisy.generators.size());
      auto letter = [&] {
        return Letter{static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1};
      };
      // New generator x with relator x w: x is redundant.
      Word w;
      for (int i = 0; i < 4; ++i) w.push_back(letter());
      noisy.generators.push_back("x");
      Word def{{gens, 1}};
      def.insert(def.end(), w.begin(), w.end());
      noisy.relators.push_back(def);
      // Product of two relators, a cancelling pair and a conjugate.
      if (noisy.relators.size() >= 2) {
        Word prod = noisy.relators[0];
        prod.insert(prod.end(), noisy.relators[1].begin(), noisy.relators[1].end());
        const auto l = letter();
        prod.insert(prod.begin() + static_cast<long>(rng() % prod.size()), {l, {l.generator, -l.exponent}});
        noisy.relators.push_back(prod);
      }
      auto conj = noisy.relators[rng() % noisy.relators.size()];
      const auto l = letter();
      conj.insert(conj.begin(), l);
      conj.push_back({l.generator, -l.exponent});
      noisy.relators.push_back(conj);
      std::shuffle(noisy.relators.begin(), noisy.relators.end(), rng);
      CHECK(homology_h1(noisy) == base);
    }
  }
}

TEST_CASE("first homology of fixtures") {
  for (int n = 2; n <= 5; ++n) CHECK(homology_h1(full_presentation(fixtures::k2(n))).trivial());
  // The circle: the 2-skeleton sees H₁(S¹), the c-group does not.
  CHECK(homology_h1(full_presentation(fixtures::k2(1))).to_string() == "Z");
  CHECK(homology_h1(pi1_presentation(fixtures::k2(1), 0, Target::M)).trivial());
  CHECK(homology_h1(full_presentation(fixtures::rp3())).to_string() == "Z/2");
  CHECK(homology_h1(full_presentation(fixtures::t6())).to_string() == "Z^2");
  CHECK(homology_h1(full_presentation(fixtures::nonbip4_a())).to_string() == "Z/2");
  CHECK(homology_h1(full_presentation(fixtures::nonbip4_b())).to_string() == "Z/2");
  CHECK(homology_h1(full_presentation(fixtures::f_tb())).to_string() == "Z^2");
  CHECK(homology_h1(full_presentation(fixtures::sigma1_t6())).to_string() == "Z^2");
}

TEST_CASE("surface homology follows from Euler characteristic and orientability") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto g = fixtures::random_graph(2, 2 + 2 * static_cast<int>(rng() % 5), rng);
    const long chi = oracle::residues_of_size(g, 2) - g.half_order();
    AbelianInvariants expected;
    if (!oracle::two_coloring(g).empty()) {
      expected.free_rank = static_cast<int>(2 - chi);
    } else {
      expected.free_rank = static_cast<int>(1 - chi);
      expected.torsion = {2};
    }
    CHECK(homology_h1(full_presentation(g)) == expected);
  }
}

TEST_CASE("c-group presentations agree with the full presentation") {
  for (Color c = 0; c < 4; ++c) {
    CHECK(homology_h1(pi1_presentation(fixtures::rp3(), c, Target::M)).to_string() == "Z/2");
    CHECK(homology_h1(pi1_presentation(fixtures::rp3(), c, Target::HatM)).to_string() == "Z/2");
  }
  // Colors 0 and 2 miss a singular residue of the double suspension.
  CHECK(homology_h1(pi1_presentation(fixtures::f_tb(), 0, Target::M)).to_string() == "Z^2");
  CHECK_THROWS_AS(pi1_presentation(fixtures::sigma1_t6(), 0, Target::HatM), HypothesisViolated);
  const auto cg = c_group_presentation(fixtures::t6(), 0);
  CHECK(cg.generators.size() == 3);
  CHECK(cg.relators.size() == 2);
}

TEST_CASE("presentation text lists generators then relators") {
  const auto text = to_text(full_presentation(fixtures::k2(1)));
  CHECK(text.rfind("gen ", 0) == 0);
  CHECK(text.find("rel ") != std::string::npos);
}

TEST_CASE("cyclic orders and regular genus match the oracle") {
  for (int k = 2; k <= 6; ++k) CHECK(cyclic_orders(k) == oracle::cyclic_orders(k));
  std::mt19937_64 rng(54);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto g = fixtures::random_graph(n, 2 + 2 * static_cast<int>(rng() % 4), rng);
    long total = 0;
    for (const auto& eps : oracle::cyclic_orders(g.num_colors())) {
      const long twice = oracle::twice_genus(g, eps);
      CHECK(regular_genus(g, eps).twice == twice);
      if (!oracle::two_coloring(g).empty()) CHECK(twice % 2 == 0);
      total += twice;
    }
    CHECK(g_degree_value(g).twice == total);
  }
  CHECK_THROWS_AS(regular_genus(fixtures::t6(), {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("G-degree identities in dimension four") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 60; ++i) {
    const auto g = fixtures::random_graph(4, 2 + 2 * static_cast<int>(rng() % 4), rng);
    const auto r = g_degree(g);
    REQUIRE(r.checks.has_value());
    CHECK(r.checks->all());
    CHECK(r.omega.twice == 6 * (4 + 6 * g.half_order() - oracle::residues_of_size(g, 2)));
    CHECK(*r.omega_reduced * 3 * 2 == r.omega.twice);
  }
  CHECK(*g_degree(fixtures::k2(4)).omega_reduced == 0);
  CHECK(*g_degree(fixtures::q4()).omega_reduced == 2);
  CHECK(*g_degree(fixtures::nonbip4_a()).omega_reduced == 3);
  CHECK(*g_degree(fixtures::nonbip4_b()).omega_reduced == 4);
  CHECK_FALSE(g_degree(fixtures::rp3()).checks.has_value());
}

TEST_CASE("classify_small table") {
  CHECK(classify_small(fixtures::k2(1)) == "S¹");
  CHECK(classify_small(fixtures::k2(2)) == "S²");
  CHECK(classify_small(fixtures::t6()) == "S¹×S¹");
  CHECK(classify_small(fixtures::k2(4)) == "S⁴");
  CHECK(classify_small(fixtures::q4()) == "S⁴");
  CHECK(classify_small(fixtures::nonbip4_a()) == "RP²×B²");
  CHECK(classify_small(fixtures::nonbip4_b()) == "RP²×B²");
  CHECK(classify_small(fixtures::f_tb()) == "S¹×S¹×B²");
  CHECK(classify_small(fixtures::sigma1_t6()) == "S¹×S¹×I");
  CHECK_THROWS_AS(classify_small(fixtures::rp3()), OutOfTableRange);
  CHECK_THROWS_AS(classify_small(fixtures::k2(5)), OutOfTableRange);
}

TEST_CASE("fingerprint fields") {
  const auto f = fingerprint(fixtures::sigma1_t6());
  CHECK(f.bipartite);
  CHECK(f.closed == TriBool::False);
  CHECK(f.euler_manifold == 0);
  CHECK(f.boundary_components == 2);
  CHECK(f.singular_dimension == 0);
  CHECK(f.singular_component_euler == std::vector<long>{1, 1});
  CHECK_FALSE(f.omega.has_value());
  CHECK(fingerprint(fixtures::q4()).omega.has_value());
}

TEST_CASE("per-color cyclic orders") {
  const std::vector<std::vector<Color>> expected = {
      {1, 3, 4, 2}, {0, 3, 2, 4}, {0, 3, 4, 1}, {0, 2, 1, 4}, {0, 2, 3, 1}};
  for (Color c = 0; c < 5; ++c) {
    CHECK(epsilon_table(c) == expected[c]);
    auto sorted = epsilon_table(c);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Color> hat;
    for (Color d = 0; d < 5; ++d) {
      if (d != c) hat.push_back(d);
    }
    CHECK(sorted == hat);
  }
}
