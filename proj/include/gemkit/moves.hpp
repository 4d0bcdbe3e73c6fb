#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gemkit/singularity.hpp"

namespace gemkit {

enum class DipoleKind { Ordinary, Singular, Unresolved };
enum class Properness { Proper, NotProper, Unknown };

const char* to_string(DipoleKind k);
const char* to_string(Properness p);

/// Vertices `first` < `second` joined by exactly the edges colored `colors`,
/// lying in different residues of the complementary colors.
struct Dipole {
  Vertex first = 0;
  Vertex second = 0;
  ColorSet colors;
  DipoleKind kind = DipoleKind::Unresolved;
  Properness properness = Properness::Unknown;

  int h() const { return colors.size(); }
};

class MoveError : public std::runtime_error {
 public:
  enum class Kind { NotADipole, WouldAnnihilate, DimensionMismatch, InvalidVertex, InvalidColor };
  MoveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Checks the dipole condition for the pair (kind and properness unset).
std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex u, Vertex v);
/// Every dipole, unlabelled, ordered by (first, second).
std::vector<Dipole> dipole_candidates(const ColoredGraph& g);
/// Every dipole with kind and properness filled from the classification.
std::vector<Dipole> find_dipoles(const Classification& cls);
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

/// Kind and properness of a dipole of cls.graph().
void label_dipole(const Classification& cls, Dipole& d);

/// A c-edge to cut when inserting a dipole: `toward_first` gets joined to the
/// new first vertex, `toward_second` to the new second one.
struct HangingEdge {
  Color color = 0;
  Vertex toward_first = 0;
  Vertex toward_second = 0;
};

/// Everything needed to insert a dipole: its colors, one hanging edge per
/// complementary color, and optionally the ids the two new vertices take
/// (existing vertices are shifted up to make room). Without ids they are
/// appended as order and order+1.
struct DipoleInsertion {
  ColorSet colors;
  std::vector<HangingEdge> edges;
  std::optional<std::pair<Vertex, Vertex>> positions;
};

/// Throws MoveError::NotADipole if the inserted pair fails the dipole
/// condition.
ColoredGraph add_dipole(const ColoredGraph& g, const DipoleInsertion& ins);

enum class DipoleSide { First, Second };
/// Inserts an h-dipole next to v, cutting the edges of v whose colors are not
/// in `colors`; v ends up attached to the chosen side. Always ordinary.
ColoredGraph add_dipole_at(const ColoredGraph& g, Vertex v, ColorSet colors,
                           DipoleSide side = DipoleSide::First);

struct Cancellation {
  ColoredGraph graph;
  DipoleInsertion inverse;  // add_dipole(graph, inverse) restores the input
};

/// Throws MoveError (NotADipole, WouldAnnihilate).
Cancellation cancel_dipole_with_inverse(const ColoredGraph& g, const Dipole& d);
ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d);

/// Adds a color n+1 whose matching copies color c.
ColoredGraph suspend(const ColoredGraph& g, Color c);

/// Removes v1 and v2 and welds the hanging edges color by color.
ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2);

struct VertexIndex {
  Vertex vertex = 0;
  int index = 0;  // singular n-residues through the vertex
};

/// Throws UnresolvedResidue.
VertexIndex vertex_index(const Classification& cls, Vertex v);
VertexIndex vertex_index(const ColoredGraph& g, Vertex v);

/// Repeatedly adds an n-dipole along the c-edge of a vertex of least positive
/// index, c chosen so the index drops, until some vertex has index 0. Throws
/// UnresolvedResidue.
ColoredGraph internalize(const ColoredGraph& g);

enum class SimplifyPolicy { LargestFirst, SmallestFirst };

struct SimplifyOptions {
  SimplifyPolicy policy = SimplifyPolicy::LargestFirst;
  int step_factor = 10;  // at most step_factor * order cancellations
};

struct SimplifyResult {
  ColoredGraph graph;
  std::vector<Dipole> trace;  // cancelled dipoles, each in its own step's labels
  /// False if the run stopped with unclassified dipoles left, or at the step cap.
  bool complete = true;
};

/// Cancels ordinary dipoles until none remain.
SimplifyResult simplify(const ColoredGraph& g, const SimplifyOptions& options = {});

/// Adds k random ordinary dipoles, reproducibly for a given seed.
ColoredGraph inflate(const ColoredGraph& g, int k, std::uint64_t seed);

}  // namespace gemkit
