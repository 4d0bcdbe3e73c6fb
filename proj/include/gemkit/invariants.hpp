#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gemkit/presentation.hpp"
#include "gemkit/singularity.hpp"

namespace gemkit {

enum class Target { M, HatM };

/// A hypothesis of a presentation theorem fails at `residue`.
class HypothesisViolated : public std::runtime_error {
 public:
  HypothesisViolated(ResidueId residue, const std::string& what)
      : std::runtime_error(what), residue_(residue) {}
  ResidueId residue() const { return residue_; }

 private:
  ResidueId residue_;
};

/// The c-group with a minimum spanning set of c-edges over the ĉ-residues
/// killed. Target M needs c ordinary; target HatM needs every other color
/// ordinary. Throws HypothesisViolated, or UnresolvedResidue when a needed
/// class is Unknown.
GroupPresentation pi1_presentation(const Classification& cls, Color c, Target target);
GroupPresentation pi1_presentation(const ColoredGraph& g, Color c, Target target);

/// A number stored as twice its value (genera of non-orientable surfaces are
/// halved, so halves occur).
struct HalfInteger {
  long twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  std::string to_string() const;

  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

/// Cyclic color orders up to inversion, as (0 ε1 ... εn) with ε1 < εn.
std::vector<std::vector<Color>> cyclic_orders(int num_colors);

/// Regular genus for the cyclic order eps (any rotation or reflection of a
/// permutation of all colors). Throws std::invalid_argument otherwise.
HalfInteger regular_genus(const ColoredGraph& g, const std::vector<Color>& eps);

/// Sum of regular genera over cyclic_orders.
HalfInteger g_degree_value(const ColoredGraph& g);

/// The fixed cyclic orders of the four colors other than c, for 5 colors.
const std::vector<Color>& epsilon_table(Color c);

struct GDegreeChecks {
  bool multiple_of_three = false;
  bool closed_form = false;     // ω_G = 3(4 + 6p - |R_2|)
  bool subdegree = false;       // Σ_c ω_G(Γ_ĉ) = 3ρ_G
  bool relation_per_color = false;  // 2g_ĉ - 2ρ_ĉ = Σ g_{ε^c_i ε^c_i+1} - 2p for each c

  bool all() const { return multiple_of_three && closed_form && subdegree && relation_per_color; }
};

struct GDegreeReport {
  int n = 0;
  int p = 0;
  std::vector<std::pair<std::vector<Color>, HalfInteger>> per_permutation;
  HalfInteger omega;
  // Dimension 4 only.
  std::optional<long> omega_reduced;
  std::optional<long> rho;
  std::optional<GDegreeChecks> checks;
};

GDegreeReport g_degree(const ColoredGraph& g);

/// Topological summary used to compare graphs for the same manifold.
struct Fingerprint {
  int n = 0;
  int order = 0;
  bool bipartite = false;
  TriBool closed = TriBool::Indeterminate;
  std::optional<long> euler_manifold;  // absent when some residue is Unknown
  long euler_quasi = 0;
  AbelianInvariants h1;  // H₁(M_Γ)
  std::optional<int> boundary_components;
  std::optional<int> singular_dimension;         // absent also when empty
  std::vector<long> singular_component_euler;    // sorted
  std::optional<long> omega;                     // ω_G, dimension 4 only

  /// The parts preserved by proper dipole moves (drops order and ω_G).
  struct Topology {
    bool bipartite;
    std::optional<long> euler_manifold;
    long euler_quasi;
    AbelianInvariants h1;
    std::optional<int> boundary_components;
    std::optional<int> singular_dimension;
    std::vector<long> singular_component_euler;
    friend bool operator==(const Topology&, const Topology&) = default;
  };
  Topology topology() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Classification& cls);
Fingerprint fingerprint(const ColoredGraph& g);

class OutOfTableRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Names the manifold M_Γ for order ≤ 6 and n ≤ 4 from a built-in table;
/// "Unknown" when the fingerprint matches no entry. Throws OutOfTableRange.
std::string classify_small(const ColoredGraph& g);

/// "S⁴"-style superscripts.
std::string superscript(int k);

}  // namespace gemkit
