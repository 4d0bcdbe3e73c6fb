#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gemkit/canonical.hpp"

namespace gemkit {

struct CensusParams {
  int n = 4;
  int order = 4;
  Equivalence equivalence = Equivalence::ColorPermuting;
  bool bipartite_only = false;
  bool nonbipartite_only = false;
  bool supercontracted = false;
  bool no_ordinary_dipoles = false;

  /// Comma-separated filter names, "none" if no filter is set.
  std::string filters() const;
};

struct CensusBudget {
  int max_n = 5;
  int max_order = 8;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Catalogue {
  CensusParams params;
  std::vector<std::string> entries;  // catalogue codes of canonical representatives, sorted
  int bipartite = 0;
  int nonbipartite = 0;

  std::vector<ColoredGraph> graphs() const;
};

/// All connected graphs with params.n + 1 colors and params.order vertices, one
/// per isomorphism class, that pass the filters. `threads` caps the worker
/// count (0: hardware concurrency). Throws BudgetExceeded and
/// std::invalid_argument for inconsistent parameters.
Catalogue enumerate(const CensusParams& params, const CensusBudget& budget = {}, int threads = 0);

/// Worker count from GEMKIT_THREADS, falling back to hardware concurrency.
int default_threads();

std::string to_text(const Catalogue& cat);
/// Throws std::invalid_argument on malformed text.
Catalogue parse_catalogue(std::string_view text);

struct CensusEntryReport {
  std::string code;
  bool bipartite = false;
  bool supercontracted = false;
  std::string closed;            // true/false/indeterminate
  std::string singular_manifold;
  std::string euler_manifold;    // "?" when unresolved
  long euler_quasi = 0;
  std::string h1;
  std::string boundary;          // "?" when unresolved
  std::string omega_reduced;     // "-" outside dimension 4
  std::string name;              // classify_small, "-" outside its range
};

struct CensusReport {
  std::vector<CensusEntryReport> entries;
  std::vector<std::pair<long, int>> omega_histogram;  // reduced G-degree -> count
  int closed = 0;
  int singular_manifolds = 0;
  int indeterminate = 0;
  // Identity checks over all entries (dimension 4 only; vacuous otherwise).
  bool prova_ok = true;
  bool subdegree_ok = true;
  bool parity_ok = true;
};

CensusReport census_report(const Catalogue& cat);
std::string to_text(const CensusReport& report);

}  // namespace gemkit
