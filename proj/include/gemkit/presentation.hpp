#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Generators and relators of a finitely presented group. Generators listed in
/// `extra_killed` are trivial in the group on top of `relators`.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<int> extra_killed;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Z^free_rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ... and every t_i > 1.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Nonzero diagonal entries of the Smith normal form (positive, each dividing
/// the next). Throws std::overflow_error if intermediate entries overflow.
std::vector<std::int64_t> elementary_divisors(IntMatrix m);

/// The cokernel Z^cols / rowspace of an integer matrix.
AbelianInvariants cokernel(const IntMatrix& m, int cols);

/// Abelianization of the presented group.
AbelianInvariants homology_h1(const GroupPresentation& pres);

/// The c-group: one generator per c-edge (oriented from its smaller endpoint,
/// numbered by that endpoint), one relator per {i,c}-bigon, read from the
/// bigon's minimum vertex starting along its c-edge.
GroupPresentation c_group_presentation(const ColoredGraph& g, Color c);

/// π₁ of the 2-skeleton: generators are all edges (color-major, then by
/// smaller endpoint), relators all bigons, and the edges of a minimum-index
/// spanning tree are killed. For n > 1 this presents π₁(M_Γ).
GroupPresentation full_presentation(const ColoredGraph& g);

/// `gen <label>` lines, then `rel <word>` lines (killed generators become
/// single-letter relators). Words look like `g3 g1^-1 g2`.
std::string to_text(const GroupPresentation& pres);

}  // namespace gemkit
