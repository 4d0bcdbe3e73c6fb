#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gemkit/presentation.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

enum class Verdict { Sphere, NotSphere, Unknown };
enum class ResidueClass { Ordinary, Singular, Unknown };
enum class TriBool { False, True, Indeterminate };

const char* to_string(Verdict v);
const char* to_string(ResidueClass c);
const char* to_string(TriBool t);

struct SphereStatus {
  Verdict verdict = Verdict::Unknown;
  std::string certificate;
};

struct SphereOptions {
  /// Greedy dipole reduction gives up after step_factor * order cancellations.
  int step_factor = 10;
};

/// Is ĥM_Γ a sphere? Exact for n ≤ 2. From n = 3 on, NotSphere comes from a
/// failed necessary condition (Euler characteristic, orientability, a singular
/// proper residue, nonzero H₁) and Sphere only from reducing to order 2 by
/// dipole cancellations; anything else is Unknown.
SphereStatus sphere_status(const ColoredGraph& g, const SphereOptions& options = {});

/// Raised when a result depends on a residue whose class is Unknown.
class UnresolvedResidue : public std::runtime_error {
 public:
  explicit UnresolvedResidue(ResidueId id);
  ResidueId residue() const { return id_; }

 private:
  ResidueId id_;
};

/// The residue lattice with every residue of at most n colors classified as
/// ordinary or singular. The residue with all n+1 colors is left Unknown; it
/// is the graph itself and not part of R(Γ).
class Classification {
 public:
  explicit Classification(const ColoredGraph& g, const SphereOptions& options = {});

  const ResidueLattice& lattice() const { return lattice_; }
  const ColoredGraph& graph() const { return lattice_.graph(); }
  int dimension() const { return lattice_.num_colors() - 1; }

  ResidueClass operator[](int residue) const { return classes_[residue]; }
  ResidueClass class_of(ColorSet colors, Vertex v) const {
    return classes_[lattice_.index_of(colors, v)];
  }
  const std::string& certificate(int residue) const { return certificates_[residue]; }

  /// Number of h-residues with the given class.
  int count(int h, ResidueClass cls) const;
  /// First residue of at most max_h colors whose class is Unknown.
  std::optional<int> first_unknown(int max_h) const;
  /// Throws UnresolvedResidue unless every residue of at most max_h colors is
  /// classified.
  void require_resolved(int max_h) const;

 private:
  ResidueLattice lattice_;
  std::vector<ResidueClass> classes_;
  std::vector<std::string> certificates_;
};

/// Ordinary for at most two colors, otherwise from sphere_status of the
/// residue as a graph.
ResidueClass classify_residue(const ResidueView& rv, const SphereOptions& options = {});

struct SingularComponent {
  std::vector<int> residues;           // lattice indices, ascending
  std::vector<int> boundary_residues;  // the singular n-residues among them
  int dimension = 0;
  long euler = 0;
};

struct SingularSetSummary {
  std::optional<int> dimension;  // empty singular set when absent
  std::vector<SingularComponent> components;
  long euler = 0;

  bool empty() const { return !dimension.has_value(); }
};

/// Throws UnresolvedResidue if any residue is Unknown.
SingularSetSummary singular_summary(const Classification& cls);
SingularSetSummary singular_summary(const ColoredGraph& g);

/// All n-residues ordinary.
TriBool is_closed_manifold(const Classification& cls);
TriBool is_closed_manifold(const ColoredGraph& g);
/// No singular residue of fewer than n colors.
TriBool is_singular_manifold(const Classification& cls);
TriBool is_singular_manifold(const ColoredGraph& g);

struct EulerCharacteristics {
  long manifold = 0;  // χ(M_Γ)
  long quasi = 0;     // χ(ĥM_Γ)
  long singular = 0;  // χ(|S_Γ|)
};

/// χ(ĥM_Γ) from the residue counts alone.
long euler_quasi(const ResidueLattice& lattice);
/// Throws UnresolvedResidue.
EulerCharacteristics euler_characteristics(const Classification& cls);
EulerCharacteristics euler_characteristics(const ColoredGraph& g);

struct BoundaryPiece {
  ResidueId residue;
  int order = 0;
  long euler_quasi = 0;
  bool bipartite = false;
  std::optional<AbelianInvariants> h1;  // H₁(M_Λ), when Λ has dimension ≥ 2
};

struct BoundaryComponent {
  enum class Shape { Single, Glued };
  int component = 0;
  Shape shape = Shape::Single;
  std::vector<BoundaryPiece> pieces;
  std::vector<ResidueId> shared;  // singular (n-1)-residues, Glued only
};

struct BoundaryReport {
  int component_count = 0;
  /// False when the singular set has dimension ≥ 2; then only the count is set.
  bool supported = true;
  std::vector<BoundaryComponent> components;
};

/// Throws UnresolvedResidue.
BoundaryReport boundary_structure(const Classification& cls);
BoundaryReport boundary_structure(const ColoredGraph& g);

}  // namespace gemkit
