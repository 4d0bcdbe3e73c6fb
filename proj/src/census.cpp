#include "gemkit/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gemkit/invariants.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

std::string CensusParams::filters() const {
  std::vector<std::string> names;
  if (bipartite_only) names.push_back("bipartite");
  if (nonbipartite_only) names.push_back("nonbipartite");
  if (supercontracted) names.push_back("supercontracted");
  if (no_ordinary_dipoles) names.push_back("no-ordinary-dipoles");
  if (names.empty()) return "none";
  std::string out = names.front();
  for (std::size_t i = 1; i < names.size(); ++i) out += "," + names[i];
  return out;
}

std::vector<ColoredGraph> Catalogue::graphs() const {
  std::vector<ColoredGraph> out;
  out.reserve(entries.size());
  for (const auto& code : entries) out.push_back(parse_code(code));
  return out;
}

int default_threads() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GEMKIT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = threads > 0 ? std::min(threads, cap) : cap;
  }
  return std::max(threads, 1);
}

namespace {

using Table = std::vector<std::vector<Vertex>>;

void all_matchings(std::vector<Vertex>& current, std::vector<Table::value_type>& out) {
  const auto it = std::find(current.begin(), current.end(), -1);
  if (it == current.end()) {
    out.push_back(current);
    return;
  }
  const Vertex v = static_cast<Vertex>(it - current.begin());
  for (Vertex w = v + 1; w < static_cast<Vertex>(current.size()); ++w) {
    if (current[w] != -1) continue;
    current[v] = w;
    current[w] = v;
    all_matchings(current, out);
    current[v] = -1;
    current[w] = -1;
  }
}

bool two_colorable(const Table& table, int order) {
  std::vector<int> side(order, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < order; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& m : table) {
        const Vertex w = m[v];
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_ordinary_dipole(const ColoredGraph& g) {
  auto ds = dipole_candidates(g);
  if (ds.empty()) return false;
  for (const auto& d : ds) {
    if (d.h() >= g.dimension() - 1) return true;
  }
  const Classification cls(g);
  for (auto& d : ds) {
    label_dipole(cls, d);
    if (d.kind == DipoleKind::Ordinary) return true;
  }
  return false;
}

}  // namespace

Catalogue enumerate(const CensusParams& params, const CensusBudget& budget, int threads) {
  if (params.n < 1 || params.order < 2 || params.order % 2 != 0) {
    throw std::invalid_argument("census needs n >= 1 and an even order >= 2");
  }
  if (params.bipartite_only && params.nonbipartite_only) {
    throw std::invalid_argument("bipartite and nonbipartite filters exclude each other");
  }
  if (params.n > budget.max_n || params.order > budget.max_order) {
    throw BudgetExceeded("census n=" + std::to_string(params.n) + " order=" +
                         std::to_string(params.order) + " exceeds budget n <= " +
                         std::to_string(budget.max_n) + ", order <= " +
                         std::to_string(budget.max_order));
  }
  if (threads <= 0) threads = default_threads();
  const int order = params.order;
  const Equivalence eq = params.equivalence;

  std::vector<Table::value_type> matchings;
  {
    std::vector<Vertex> scratch(order, -1);
    all_matchings(scratch, matchings);
  }

  std::map<std::string, Table> level;
  {
    Table start{matchings.front()};
    auto lab = canonical_labeling(start, order, eq);
    level.emplace(lab.code.bytes, std::move(lab.table));
  }
  for (int colors = 2; colors <= params.n + 1; ++colors) {
    std::vector<const Table*> parents;
    for (const auto& [code, table] : level) parents.push_back(&table);
    std::map<std::string, Table> next;
    std::mutex lock;
    auto work = [&](int worker, int workers) {
      std::map<std::string, Table> local;
      Table table;
      for (std::size_t i = worker; i < parents.size(); i += workers) {
        table = *parents[i];
        table.emplace_back();
        for (const auto& m : matchings) {
          table.back() = m;
          if (params.bipartite_only && !two_colorable(table, order)) continue;
          auto lab = canonical_labeling(table, order, eq);
          local.try_emplace(std::move(lab.code.bytes), std::move(lab.table));
        }
      }
      std::lock_guard guard(lock);
      next.merge(local);
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(parents.size())));
    if (workers == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
      for (auto& t : pool) t.join();
    }
    level = std::move(next);
  }

  Catalogue cat;
  cat.params = params;
  for (auto& [code, table] : level) {
    if (count_components(table, order) != 1) continue;
    ColoredGraph g(params.n, std::move(table));
    const bool bip = is_bipartite(g);
    if (params.bipartite_only && !bip) continue;
    if (params.nonbipartite_only && bip) continue;
    if (params.supercontracted && !is_supercontracted(g)) continue;
    if (params.no_ordinary_dipoles && has_ordinary_dipole(g)) continue;
    cat.entries.push_back(to_code(g));
    ++(bip ? cat.bipartite : cat.nonbipartite);
  }
  std::sort(cat.entries.begin(), cat.entries.end());
  return cat;
}

std::string to_text(const Catalogue& cat) {
  std::ostringstream out;
  out << "# gemkit-census v1 n=" << cat.params.n << " order=" << cat.params.order
      << " eq=" << to_string(cat.params.equivalence) << " filters=" << cat.params.filters() << '\n';
  for (const auto& e : cat.entries) out << e << '\n';
  out << "# count=" << cat.entries.size() << " bipartite=" << cat.bipartite
      << " nonbipartite=" << cat.nonbipartite << '\n';
  return out.str();
}

namespace {

std::map<std::string, std::string> header_fields(const std::string& line, std::size_t skip) {
  std::map<std::string, std::string> out;
  std::istringstream in(line.substr(skip));
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed catalogue field '" + token + "'");
    out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

}  // namespace

Catalogue parse_catalogue(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  const std::string magic = "# gemkit-census v1";
  if (!std::getline(in, line) || line.rfind(magic, 0) != 0) {
    throw std::invalid_argument("missing catalogue header");
  }
  auto fields = header_fields(line, magic.size());
  Catalogue cat;
  try {
    cat.params.n = std::stoi(fields.at("n"));
    cat.params.order = std::stoi(fields.at("order"));
    cat.params.equivalence = parse_equivalence(fields.at("eq"));
    const std::string filters = fields.at("filters");
    std::istringstream fs(filters);
    std::string f;
    while (std::getline(fs, f, ',')) {
      if (f == "none") continue;
      if (f == "bipartite") cat.params.bipartite_only = true;
      else if (f == "nonbipartite") cat.params.nonbipartite_only = true;
      else if (f == "supercontracted") cat.params.supercontracted = true;
      else if (f == "no-ordinary-dipoles") cat.params.no_ordinary_dipoles = true;
      else throw std::invalid_argument("unknown filter '" + f + "'");
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("catalogue header lacks n, order, eq or filters");
  }
  bool footer = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# count=", 0) == 0) {
      auto foot = header_fields(line, 1);
      if (std::stoul(foot.at("count")) != cat.entries.size()) {
        throw std::invalid_argument("catalogue footer count does not match entries");
      }
      footer = true;
      continue;
    }
    if (line[0] == '#') continue;
    if (footer) throw std::invalid_argument("catalogue entry after footer");
    const auto g = parse_code(line);
    ++(is_bipartite(g) ? cat.bipartite : cat.nonbipartite);
    cat.entries.push_back(line);
  }
  if (!footer) throw std::invalid_argument("missing catalogue footer");
  return cat;
}

CensusReport census_report(const Catalogue& cat) {
  CensusReport report;
  std::map<long, int> histogram;
  for (const auto& code : cat.entries) {
    const ColoredGraph g = parse_code(code);
    const Classification cls(g);
    const auto f = fingerprint(cls);
    CensusEntryReport e;
    e.code = code;
    e.bipartite = f.bipartite;
    e.supercontracted = is_supercontracted(g);
    e.closed = to_string(f.closed);
    const TriBool singular = is_singular_manifold(cls);
    e.singular_manifold = to_string(singular);
    e.euler_manifold = f.euler_manifold ? std::to_string(*f.euler_manifold) : "?";
    e.euler_quasi = f.euler_quasi;
    e.h1 = f.h1.to_string();
    e.boundary = f.boundary_components ? std::to_string(*f.boundary_components) : "?";
    e.omega_reduced = "-";
    e.name = "-";
    if (g.order() <= 6 && g.dimension() <= 4) e.name = classify_small(g);

    if (f.closed == TriBool::True) ++report.closed;
    if (singular == TriBool::True) ++report.singular_manifolds;
    if (f.closed == TriBool::Indeterminate || singular == TriBool::Indeterminate) ++report.indeterminate;

    if (g.dimension() == 4) {
      const auto gd = g_degree(g);
      if (!gd.checks->all()) report.subdegree_ok = false;
      if (gd.omega_reduced) {
        const long w = *gd.omega_reduced;
        e.omega_reduced = std::to_string(w);
        ++histogram[w];
        if ((f.bipartite || singular == TriBool::True) && w % 2 != 0) report.parity_ok = false;
      } else {
        report.subdegree_ok = false;
      }
      const auto& lat = cls.lattice();
      const long prova = 2L * lat.count_of_size(3) - 3L * lat.count_of_size(2) + 10L * g.half_order();
      if (prova < 0 || (prova == 0) != (singular == TriBool::True)) report.prova_ok = false;
    }
    report.entries.push_back(std::move(e));
  }
  report.omega_histogram.assign(histogram.begin(), histogram.end());
  return report;
}

std::string to_text(const CensusReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    out << "entry " << i << " bipartite=" << (e.bipartite ? "true" : "false")
        << " boundary=" << e.boundary << " chi_M=" << e.euler_manifold
        << " chi_hatM=" << e.euler_quasi << " closed=" << e.closed << " code=" << e.code
        << " h1=" << e.h1 << " name=" << e.name << " omega_G_reduced=" << e.omega_reduced
        << " singular_manifold=" << e.singular_manifold
        << " supercontracted=" << (e.supercontracted ? "true" : "false") << '\n';
  }
  out << "omega_G_reduced_histogram";
  if (report.omega_histogram.empty()) out << " -";
  for (const auto& [w, count] : report.omega_histogram) out << ' ' << w << ':' << count;
  out << '\n';
  out << "closed=" << report.closed << " singular_manifolds=" << report.singular_manifolds
      << " indeterminate=" << report.indeterminate << '\n';
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  out << "check_parity=" << verdict(report.parity_ok) << " check_prova=" << verdict(report.prova_ok)
      << " check_subdegree=" << verdict(report.subdegree_ok) << '\n';
  return out.str();
}

}  // namespace gemkit
