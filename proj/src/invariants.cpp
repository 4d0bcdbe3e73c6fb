#include "gemkit/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "gemkit/union_find.hpp"

namespace gemkit {

GroupPresentation pi1_presentation(const Classification& cls, Color c, Target target) {
  const auto& g = cls.graph();
  if (c < 0 || c >= g.num_colors()) {
    throw std::out_of_range("color " + std::to_string(c) + " out of range");
  }
  const auto& lattice = cls.lattice();
  for (Color d = 0; d < g.num_colors(); ++d) {
    if ((target == Target::M) != (d == c)) continue;
    const auto [begin, end] = lattice.range(g.all_colors().without(d));
    for (int r = begin; r < end; ++r) {
      if (cls[r] == ResidueClass::Unknown) throw UnresolvedResidue(lattice.id(r));
      if (cls[r] == ResidueClass::Singular) {
        const auto id = lattice.id(r);
        throw HypothesisViolated(id, "color " + std::to_string(d) + " is singular: " +
                                         id.colors.to_string() + "-residue at vertex " +
                                         std::to_string(id.min_vertex));
      }
    }
  }
  auto pres = c_group_presentation(g, c);
  const ColorSet hat = g.all_colors().without(c);
  UnionFind uf(lattice.count(hat));
  const int base = lattice.range(hat).first;
  int generator = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = g.neighbor(v, c);
    if (v > w) continue;
    if (uf.unite(lattice.index_of(hat, v) - base, lattice.index_of(hat, w) - base)) {
      pres.extra_killed.push_back(generator);
    }
    ++generator;
  }
  return pres;
}

GroupPresentation pi1_presentation(const ColoredGraph& g, Color c, Target target) {
  return pi1_presentation(Classification(g), c, target);
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::vector<std::vector<Color>> cyclic_orders(int num_colors) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> rest(num_colors - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;
    std::vector<Color> eps{0};
    eps.insert(eps.end(), rest.begin(), rest.end());
    out.push_back(std::move(eps));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

namespace {

int bigon_count(const ColoredGraph& g, Color i, Color j) {
  return count_components(std::vector<std::vector<Vertex>>{
                              {g.matching(i).begin(), g.matching(i).end()},
                              {g.matching(j).begin(), g.matching(j).end()}},
                          g.order());
}

// Σ_j g_{ε_j ε_{j+1}} over the cyclic order.
long cyclic_bigons(const ColoredGraph& g, const std::vector<Color>& eps) {
  long total = 0;
  for (std::size_t j = 0; j < eps.size(); ++j) total += bigon_count(g, eps[j], eps[(j + 1) % eps.size()]);
  return total;
}

}  // namespace

HalfInteger regular_genus(const ColoredGraph& g, const std::vector<Color>& eps) {
  std::vector<Color> sorted = eps;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Color> expected(g.num_colors());
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw std::invalid_argument("not a cyclic order of colors 0.." + std::to_string(g.dimension()));
  }
  // 2 - 2ρ = Σ g + (1 - n)p
  const long n = g.dimension();
  const long p = g.half_order();
  return HalfInteger{2 - cyclic_bigons(g, eps) - (1 - n) * p};
}

HalfInteger g_degree_value(const ColoredGraph& g) {
  HalfInteger total;
  for (const auto& eps : cyclic_orders(g.num_colors())) total.twice += regular_genus(g, eps).twice;
  return total;
}

const std::vector<Color>& epsilon_table(Color c) {
  static const std::vector<std::vector<Color>> table{
      {1, 3, 4, 2}, {0, 3, 2, 4}, {0, 3, 4, 1}, {0, 2, 1, 4}, {0, 2, 3, 1}};
  return table.at(c);
}

GDegreeReport g_degree(const ColoredGraph& g) {
  GDegreeReport out;
  out.n = g.dimension();
  out.p = g.half_order();
  for (const auto& eps : cyclic_orders(g.num_colors())) {
    const auto rho = regular_genus(g, eps);
    out.per_permutation.emplace_back(eps, rho);
    out.omega.twice += rho.twice;
  }
  if (out.n != 4) return out;

  const ResidueLattice lattice(g);
  const long p = out.p;
  const long r2 = lattice.count_of_size(2);
  const long r4 = lattice.count_of_size(4);
  GDegreeChecks checks;
  const bool integral = out.omega.is_integer();
  const long omega = out.omega.twice / 2;
  checks.multiple_of_three = integral && omega % 3 == 0;
  checks.closed_form = integral && omega == 3 * (4 + 6 * p - r2);
  if (checks.multiple_of_three) out.omega_reduced = omega / 3;
  out.rho = r4 + 5 * p - r2;

  long sub_total_twice = 0;
  checks.relation_per_color = true;
  for (Color c = 0; c < 5; ++c) {
    const ColorSet hat = g.all_colors().without(c);
    const auto& eps = epsilon_table(c);
    long rho_hat_twice = 0;
    for (const auto& rv : residues(g, hat)) {
      const auto rg = residue_as_graph(rv);
      sub_total_twice += g_degree_value(rg.graph).twice;
      // ε^c in the residue's local colors.
      std::vector<Color> local;
      for (Color e : eps) {
        local.push_back(static_cast<Color>(
            std::find(rg.color_labels.begin(), rg.color_labels.end(), e) - rg.color_labels.begin()));
      }
      rho_hat_twice += regular_genus(rg.graph, local).twice;
    }
    const long lhs = 2L * lattice.count(hat) - rho_hat_twice;
    const long rhs = cyclic_bigons(g, eps) - 2 * p;
    if (lhs != rhs) checks.relation_per_color = false;
  }
  checks.subdegree = sub_total_twice == 2 * 3 * *out.rho;
  out.checks = checks;
  return out;
}

Fingerprint::Topology Fingerprint::topology() const {
  return Topology{bipartite,       euler_manifold,     euler_quasi,
                  h1,              boundary_components, singular_dimension,
                  singular_component_euler};
}

Fingerprint fingerprint(const Classification& cls) {
  const auto& g = cls.graph();
  Fingerprint f;
  f.n = g.dimension();
  f.order = g.order();
  f.bipartite = is_bipartite(g);
  f.closed = is_closed_manifold(cls);
  f.euler_quasi = euler_quasi(cls.lattice());
  f.h1 = homology_h1(full_presentation(g));
  if (!cls.first_unknown(f.n)) {
    f.euler_manifold = euler_characteristics(cls).manifold;
    const auto summary = singular_summary(cls);
    f.boundary_components = static_cast<int>(summary.components.size());
    f.singular_dimension = summary.dimension;
    for (const auto& comp : summary.components) f.singular_component_euler.push_back(comp.euler);
    std::sort(f.singular_component_euler.begin(), f.singular_component_euler.end());
  }
  if (f.n == 4) f.omega = g_degree_value(g).twice / 2;
  return f;
}

Fingerprint fingerprint(const ColoredGraph& g) { return fingerprint(Classification(g)); }

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (k == 0) return digits[0];
  std::string out;
  for (; k > 0; k /= 10) out = digits[k % 10] + out;
  return out;
}

namespace {

AbelianInvariants free_abelian(int rank) { return AbelianInvariants{rank, {}}; }

std::string ball_factor(int k) {
  if (k == 1) return "I";
  return "B" + superscript(k);
}

}  // namespace

std::string classify_small(const ColoredGraph& g) {
  const int n = g.dimension();
  if (g.order() > 6 || n > 4) {
    throw OutOfTableRange("classify_small covers order <= 6 and n <= 4, got order " +
                          std::to_string(g.order()) + ", n = " + std::to_string(n));
  }
  const std::string unknown = "Unknown";
  if (n == 1) return "S¹";
  const auto f = fingerprint(g);
  const long sphere_chi = n % 2 == 0 ? 2 : 0;
  const bool closed = f.closed == TriBool::True;
  if (n == 2) {
    if (f.bipartite) {
      if (f.euler_quasi == 2) return "S²";
      if (f.euler_quasi == 0) return "S¹×S¹";
      return unknown;
    }
    if (f.euler_quasi == 1) return "RP²";
    if (f.euler_quasi == 0) return "RP²#RP²";
    return unknown;
  }
  const std::string sphere = "S" + superscript(n);
  if (g.order() == 2) return sphere;
  if (g.order() == 4) {
    if (f.bipartite) {
      return closed && f.euler_quasi == sphere_chi && f.h1.trivial() ? sphere : unknown;
    }
    if (f.euler_manifold == 1 && f.h1 == AbelianInvariants{0, {2}}) {
      return "RP²×" + ball_factor(n - 2);
    }
    return unknown;
  }
  if (!f.bipartite) return unknown;
  if (closed) return f.euler_quasi == sphere_chi && f.h1.trivial() ? sphere : unknown;
  if (!f.euler_manifold || !f.boundary_components) return unknown;
  const long chi = *f.euler_manifold;
  const int boundary = *f.boundary_components;
  if (n == 3) {
    if (boundary == 1 && chi == 0 && f.h1 == free_abelian(1)) return "S¹×B²";
    if (boundary == 2 && chi == 0 && f.h1 == free_abelian(2)) return "S¹×S¹×I";
    return unknown;
  }
  if (boundary == 1 && chi == 1 && f.h1.trivial()) return "B⁴";
  if (boundary == 1 && chi == 0 && f.h1 == free_abelian(1)) return "S¹×B³";
  if (boundary == 1 && chi == 0 && f.h1 == free_abelian(2)) return "S¹×S¹×B²";
  return unknown;
}

}  // namespace gemkit
