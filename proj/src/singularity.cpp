#include "gemkit/singularity.hpp"

#include <algorithm>
#include <map>

#include "gemkit/moves.hpp"
#include "gemkit/union_find.hpp"

namespace gemkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Sphere: return "sphere";
    case Verdict::NotSphere: return "not-sphere";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::Ordinary: return "ordinary";
    case ResidueClass::Singular: return "singular";
    case ResidueClass::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(TriBool t) {
  switch (t) {
    case TriBool::False: return "false";
    case TriBool::True: return "true";
    case TriBool::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

std::string describe(ResidueId id) {
  return id.colors.to_string() + "-residue at vertex " + std::to_string(id.min_vertex);
}

long alternating_sum(const ResidueLattice& lattice) {
  const int n = lattice.num_colors() - 1;
  long chi = 0;
  for (int h = 0; h <= n; ++h) chi += ((n - h) % 2 == 0 ? 1 : -1) * lattice.count_of_size(h);
  return chi;
}

SphereStatus reduce_to_order_two(const ColoredGraph& g, const SphereOptions& options) {
  ColoredGraph cur = g;
  int steps = 0;
  const int limit = options.step_factor * g.order();
  while (cur.order() > 2 && steps < limit) {
    auto candidates = dipole_candidates(cur);
    if (candidates.empty()) break;
    const auto best = std::max_element(candidates.begin(), candidates.end(),
                                       [](const Dipole& a, const Dipole& b) {
                                         if (a.h() != b.h()) return a.h() < b.h();
                                         return a.first > b.first;
                                       });
    cur = cancel_dipole(cur, *best);
    ++steps;
  }
  if (cur.order() == 2) {
    return {Verdict::Sphere, "reduced to order 2 by " + std::to_string(steps) + " dipole cancellations"};
  }
  return {Verdict::Unknown, "dipole reduction stopped at order " + std::to_string(cur.order())};
}

// `links_ordinary`: every proper residue is already known to be ordinary.
SphereStatus sphere_status_impl(const ColoredGraph& g, bool links_ordinary,
                                const SphereOptions& options) {
  const int n = g.dimension();
  if (n == 1) return {Verdict::Sphere, "a bigon is a circle"};
  const bool bipartite = is_bipartite(g);
  if (n == 2) {
    int bigons = 0;
    for (Color i = 0; i < 3; ++i) {
      for (Color j = i + 1; j < 3; ++j) {
        bigons += static_cast<int>(residues(g, ColorSet::of({i, j})).size());
      }
    }
    const int chi = bigons - g.half_order();
    if (!bipartite) return {Verdict::NotSphere, "non-bipartite surface, b - v/2 = " + std::to_string(chi)};
    if (chi != 2) return {Verdict::NotSphere, "b - v/2 = " + std::to_string(chi)};
    return {Verdict::Sphere, "b - v/2 = 2"};
  }

  const ResidueLattice lattice(g);
  const long chi = alternating_sum(lattice);
  const long sphere_chi = n % 2 == 0 ? 2 : 0;
  if (chi != sphere_chi) {
    return {Verdict::NotSphere, "chi = " + std::to_string(chi) + ", a sphere has " +
                                    std::to_string(sphere_chi)};
  }
  if (!bipartite) return {Verdict::NotSphere, "non-bipartite (non-orientable)"};
  if (!links_ordinary) {
    const Classification cls(g, options);
    for (int h = 3; h <= n; ++h) {
      for (int r = 0; r < lattice.size(); ++r) {
        if (lattice.colors(r).size() == h && cls[r] == ResidueClass::Singular) {
          return {Verdict::NotSphere, "singular " + describe(lattice.id(r))};
        }
      }
    }
    if (auto r = cls.first_unknown(n)) {
      return {Verdict::Unknown, "unresolved " + describe(lattice.id(*r))};
    }
  }
  // Closed from here on, so π₁(ĥM) = π₁(M) = π₁ of the 2-skeleton.
  const auto h1 = homology_h1(full_presentation(g));
  if (!h1.trivial()) return {Verdict::NotSphere, "H1 = " + h1.to_string()};
  return reduce_to_order_two(g, options);
}

}  // namespace

SphereStatus sphere_status(const ColoredGraph& g, const SphereOptions& options) {
  return sphere_status_impl(g, false, options);
}

UnresolvedResidue::UnresolvedResidue(ResidueId id)
    : std::runtime_error("unresolved " + describe(id)), id_(id) {}

Classification::Classification(const ColoredGraph& g, const SphereOptions& options)
    : lattice_(g),
      classes_(lattice_.size(), ResidueClass::Unknown),
      certificates_(lattice_.size()) {
  const int k = lattice_.num_colors();
  const int n = k - 1;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t mask : masks) {
    const ColorSet cs{mask};
    const int h = cs.size();
    if (h > n) continue;
    const auto [begin, end] = lattice_.range(cs);
    for (int r = begin; r < end; ++r) {
      if (h <= 2) {
        classes_[r] = ResidueClass::Ordinary;
        continue;
      }
      const auto down = lattice_.covers_down(r);
      bool all_ordinary = true;
      int singular_below = -1;
      for (int d : down) {
        if (classes_[d] == ResidueClass::Singular && singular_below < 0) singular_below = d;
        if (classes_[d] != ResidueClass::Ordinary) all_ordinary = false;
      }
      if (singular_below >= 0) {
        classes_[r] = ResidueClass::Singular;
        certificates_[r] = "contains singular " + describe(lattice_.id(singular_below));
        continue;
      }
      if (h == 3) {
        // Every bigon inside is a down-cover.
        const int chi = static_cast<int>(down.size()) - static_cast<int>(lattice_.vertices(r).size()) / 2;
        classes_[r] = chi == 2 ? ResidueClass::Ordinary : ResidueClass::Singular;
        certificates_[r] = "b - v/2 = " + std::to_string(chi);
        continue;
      }
      const auto rg = residue_as_graph(lattice_.view(r));
      const auto status = sphere_status_impl(rg.graph, all_ordinary, options);
      certificates_[r] = status.certificate;
      classes_[r] = status.verdict == Verdict::Sphere      ? ResidueClass::Ordinary
                    : status.verdict == Verdict::NotSphere ? ResidueClass::Singular
                                                           : ResidueClass::Unknown;
    }
  }
}

int Classification::count(int h, ResidueClass cls) const {
  int total = 0;
  for (int r = 0; r < lattice_.size(); ++r) {
    if (lattice_.colors(r).size() == h && classes_[r] == cls) ++total;
  }
  return total;
}

std::optional<int> Classification::first_unknown(int max_h) const {
  for (int r = 0; r < lattice_.size(); ++r) {
    if (lattice_.colors(r).size() <= max_h && classes_[r] == ResidueClass::Unknown) return r;
  }
  return std::nullopt;
}

void Classification::require_resolved(int max_h) const {
  if (auto r = first_unknown(max_h)) throw UnresolvedResidue(lattice_.id(*r));
}

ResidueClass classify_residue(const ResidueView& rv, const SphereOptions& options) {
  if (rv.colors.size() <= 2) return ResidueClass::Ordinary;
  const auto rg = residue_as_graph(rv);
  switch (sphere_status(rg.graph, options).verdict) {
    case Verdict::Sphere: return ResidueClass::Ordinary;
    case Verdict::NotSphere: return ResidueClass::Singular;
    case Verdict::Unknown: return ResidueClass::Unknown;
  }
  return ResidueClass::Unknown;
}

SingularSetSummary singular_summary(const Classification& cls) {
  const int n = cls.dimension();
  cls.require_resolved(n);
  const auto& lattice = cls.lattice();
  std::vector<int> singular;
  std::vector<int> slot(lattice.size(), -1);
  for (int r = 0; r < lattice.size(); ++r) {
    if (lattice.colors(r).size() <= n && cls[r] == ResidueClass::Singular) {
      slot[r] = static_cast<int>(singular.size());
      singular.push_back(r);
    }
  }
  SingularSetSummary out;
  if (singular.empty()) return out;

  UnionFind uf(static_cast<int>(singular.size()));
  for (int r : singular) {
    for (int up : lattice.covers_up(r)) {
      if (slot[up] >= 0) uf.unite(slot[r], slot[up]);
    }
  }
  std::map<int, int> component_of_root;
  int min_h = n;
  for (int r : singular) {
    const int root = uf.find(slot[r]);
    auto [it, inserted] = component_of_root.try_emplace(root, static_cast<int>(out.components.size()));
    if (inserted) {
      out.components.emplace_back();
      out.components.back().dimension = 0;
    }
    auto& comp = out.components[it->second];
    const int h = lattice.colors(r).size();
    comp.residues.push_back(r);
    if (h == n) comp.boundary_residues.push_back(r);
    comp.dimension = std::max(comp.dimension, n - h);
    comp.euler += (n - h) % 2 == 0 ? 1 : -1;
    min_h = std::min(min_h, h);
  }
  // Order components by their smallest residue index for determinism.
  std::sort(out.components.begin(), out.components.end(),
            [](const SingularComponent& a, const SingularComponent& b) {
              return a.residues.front() < b.residues.front();
            });
  for (auto& comp : out.components) {
    std::sort(comp.residues.begin(), comp.residues.end());
    std::sort(comp.boundary_residues.begin(), comp.boundary_residues.end());
    out.euler += comp.euler;
  }
  out.dimension = n - min_h;
  return out;
}

SingularSetSummary singular_summary(const ColoredGraph& g) {
  return singular_summary(Classification(g));
}

TriBool is_closed_manifold(const Classification& cls) {
  const int n = cls.dimension();
  const auto& lattice = cls.lattice();
  bool unknown = false;
  for (int r = 0; r < lattice.size(); ++r) {
    if (lattice.colors(r).size() != n) continue;
    if (cls[r] == ResidueClass::Singular) return TriBool::False;
    if (cls[r] == ResidueClass::Unknown) unknown = true;
  }
  return unknown ? TriBool::Indeterminate : TriBool::True;
}

TriBool is_closed_manifold(const ColoredGraph& g) { return is_closed_manifold(Classification(g)); }

TriBool is_singular_manifold(const Classification& cls) {
  const int n = cls.dimension();
  const auto& lattice = cls.lattice();
  bool unknown = false;
  for (int r = 0; r < lattice.size(); ++r) {
    if (lattice.colors(r).size() >= n) continue;
    if (cls[r] == ResidueClass::Singular) return TriBool::False;
    if (cls[r] == ResidueClass::Unknown) unknown = true;
  }
  return unknown ? TriBool::Indeterminate : TriBool::True;
}

TriBool is_singular_manifold(const ColoredGraph& g) {
  return is_singular_manifold(Classification(g));
}

long euler_quasi(const ResidueLattice& lattice) { return alternating_sum(lattice); }

EulerCharacteristics euler_characteristics(const Classification& cls) {
  const int n = cls.dimension();
  cls.require_resolved(n);
  EulerCharacteristics out;
  out.quasi = alternating_sum(cls.lattice());
  for (int h = 0; h <= n; ++h) {
    out.manifold += (h % 2 == 0 ? 1 : -1) * cls.count(h, ResidueClass::Ordinary);
    if (h >= 3) out.singular += ((n - h) % 2 == 0 ? 1 : -1) * cls.count(h, ResidueClass::Singular);
  }
  return out;
}

EulerCharacteristics euler_characteristics(const ColoredGraph& g) {
  return euler_characteristics(Classification(g));
}

namespace {

BoundaryPiece piece_of(const ResidueLattice& lattice, int r) {
  BoundaryPiece piece;
  piece.residue = lattice.id(r);
  const auto rg = residue_as_graph(lattice.view(r));
  piece.order = rg.graph.order();
  piece.euler_quasi = alternating_sum(ResidueLattice(rg.graph));
  piece.bipartite = is_bipartite(rg.graph);
  if (rg.graph.dimension() >= 2) piece.h1 = homology_h1(full_presentation(rg.graph));
  return piece;
}

}  // namespace

BoundaryReport boundary_structure(const Classification& cls) {
  const auto summary = singular_summary(cls);
  BoundaryReport out;
  out.component_count = static_cast<int>(summary.components.size());
  if (summary.empty()) return out;
  if (*summary.dimension >= 2) {
    out.supported = false;
    return out;
  }
  const auto& lattice = cls.lattice();
  const int n = cls.dimension();
  for (std::size_t i = 0; i < summary.components.size(); ++i) {
    const auto& comp = summary.components[i];
    BoundaryComponent bc;
    bc.component = static_cast<int>(i);
    bc.shape = comp.dimension == 0 ? BoundaryComponent::Shape::Single
                                   : BoundaryComponent::Shape::Glued;
    for (int r : comp.boundary_residues) bc.pieces.push_back(piece_of(lattice, r));
    if (bc.shape == BoundaryComponent::Shape::Glued) {
      for (int r : comp.residues) {
        if (lattice.colors(r).size() == n - 1) bc.shared.push_back(lattice.id(r));
      }
    }
    out.components.push_back(std::move(bc));
  }
  return out;
}

BoundaryReport boundary_structure(const ColoredGraph& g) {
  return boundary_structure(Classification(g));
}

}  // namespace gemkit
