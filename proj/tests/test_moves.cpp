#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gemkit/canonical.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/moves.hpp"
#include "oracles.hpp"

using namespace gemkit;

namespace {

ColorSet random_dipole_colors(int num_colors, std::mt19937_64& rng) {
  for (;;) {
    const ColorSet s(static_cast<std::uint32_t>(rng()) & ColorSet::all(num_colors).bits());
    if (!s.empty() && s != ColorSet::all(num_colors)) return s;
  }
}

}  // namespace

TEST_CASE("dipole_at checks the definition") {
  const auto g = fixtures::k2(3);
  CHECK_FALSE(dipole_at(g, 0, 1).has_value());  // all colors: no complement
  const auto h = add_dipole_at(g, 0, ColorSet::of({0, 1}));
  const auto d = dipole_at(h, 2, 3);
  REQUIRE(d.has_value());
  CHECK(d->colors == ColorSet::of({0, 1}));
  CHECK(d->first == 2);
  // In T6 every pair shares at most one color and the complement bigon is shared.
  for (const auto& cand : dipole_candidates(fixtures::t6())) {
    CHECK(cand.h() == 1);
  }
}

TEST_CASE("cancel after add restores the graph up to isomorphism") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto g = fixtures::random_graph(n, 2 + 2 * static_cast<int>(rng() % 3), rng);
    const Vertex v = static_cast<Vertex>(rng() % g.order());
    const auto colors = random_dipole_colors(g.num_colors(), rng);
    const auto h = add_dipole_at(g, v, colors, rng() % 2 ? DipoleSide::First : DipoleSide::Second);
    const auto d = dipole_at(h, g.order(), g.order() + 1);
    REQUIRE(d.has_value());
    const auto back = cancel_dipole_with_inverse(h, *d);
    CHECK(oracle::isomorphic(back.graph, g, false));
    CHECK(add_dipole(back.graph, back.inverse) == h);
  }
}

TEST_CASE("cancellation inverse is exact for every dipole of random graphs") {
  std::mt19937_64 rng(42);
  int seen = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = fixtures::random_graph(3, 8, rng);
    for (const auto& d : dipole_candidates(g)) {
      const auto c = cancel_dipole_with_inverse(g, d);
      CHECK(add_dipole(c.graph, c.inverse) == g);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("ordinary moves preserve the fingerprint") {
  std::uint64_t seed = 1;
  for (const auto& [name, g] : fixtures::all()) {
    if (g.dimension() < 2 || g.order() > 8) continue;
    CAPTURE(name);
    const auto base = fingerprint(g).topology();
    for (int i = 0; i < 4; ++i) {
      const auto big = inflate(g, 3, seed++);
      CHECK(big.order() == g.order() + 6);
      CHECK(fingerprint(big).topology() == base);
      const auto small = simplify(big);
      CHECK(small.graph.order() <= g.order());
      CHECK(fingerprint(small.graph).topology() == base);
    }
  }
}

TEST_CASE("inflation is reproducible") {
  const auto g = fixtures::rp3();
  CHECK(inflate(g, 4, 99) == inflate(g, 4, 99));
}

TEST_CASE("simplify reduces inflated spheres to the dipole graph") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = simplify(inflate(fixtures::k2(n), 5, seed));
      CHECK(r.complete);
      CHECK(r.graph == fixtures::k2(n));
    }
  }
}

TEST_CASE("singular 1-dipole cancellation drops the singular Euler characteristic by one") {
  const auto g = fixtures::doubled_t6();
  const Classification cls(g);
  auto d = dipole_at(g, 0, 6);
  REQUIRE(d.has_value());
  CHECK(d->h() == 1);
  label_dipole(cls, *d);
  CHECK(d->kind == DipoleKind::Singular);
  CHECK(d->properness == Properness::NotProper);
  const long before = euler_characteristics(cls).singular;
  const long after = euler_characteristics(cancel_dipole(g, *d)).singular;
  CHECK(before == 2);
  CHECK(after - before == -1);
}

TEST_CASE("suspension suspends the quasi-manifold") {
  for (const auto& [name, g] : fixtures::all()) {
    if (g.dimension() > 4) continue;
    CAPTURE(name);
    for (Color c = 0; c < g.num_colors(); ++c) {
      const auto s = suspend(g, c);
      CHECK(s.dimension() == g.dimension() + 1);
      CHECK(euler_quasi(ResidueLattice(s)) == 2 - euler_quasi(ResidueLattice(g)));
    }
  }
}

TEST_CASE("connected sum with a sphere is the identity") {
  const auto g = fixtures::rp3();
  const auto s = connected_sum(fixtures::k2(3), 0, g, 3);
  CHECK(isomorphic(s, g, Equivalence::ColorPreserving));
  CHECK_THROWS_AS(connected_sum(fixtures::k2(2), 0, g, 0), MoveError);
}

TEST_CASE("internalize produces a vertex of index zero") {
  const auto g = fixtures::sigma1_t6();
  CHECK(vertex_index(g, 0).index == 2);
  const auto h = internalize(g);
  CHECK(h.order() == 10);
  const Classification cls(h);
  bool found = false;
  for (Vertex v = 0; v < h.order(); ++v) found = found || vertex_index(cls, v).index == 0;
  CHECK(found);
  CHECK(fingerprint(h).topology() == fingerprint(g).topology());
  CHECK(internalize(fixtures::k2(3)) == fixtures::k2(3));
}

TEST_CASE("move errors") {
  const auto g = fixtures::k2(3);
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const MoveError& e) {
      return e.kind();
    }
    FAIL("no error");
    return MoveError::Kind::InvalidColor;
  };
  CHECK(kind([&] { cancel_dipole(g, Dipole{0, 1, ColorSet::of({0})}); }) == MoveError::Kind::WouldAnnihilate);
  const auto rp3 = fixtures::rp3();
  CHECK(kind([&] { cancel_dipole(rp3, Dipole{0, 4, ColorSet::of({0})}); }) == MoveError::Kind::NotADipole);
  CHECK(kind([&] { add_dipole_at(g, 0, ColorSet::all(4)); }) == MoveError::Kind::InvalidColor);
  CHECK(kind([&] { add_dipole_at(g, 7, ColorSet::of({0})); }) == MoveError::Kind::InvalidVertex);
}
