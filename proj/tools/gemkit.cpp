// gemkit: command-line front end for colored-graph analysis.
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gemkit/census.hpp"
#include "gemkit/dot.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/moves.hpp"

using namespace gemkit;

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kUnresolved = 3;
constexpr int kBudget = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ColoredGraph load_graph(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_gem(text);
  } catch (const GraphError& e) {
    throw InputError(path + ": " + to_string(e.kind()) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Ordered key=value pairs; records format sorts by key.
class Records {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    items_.emplace_back(key, s.str());
  }
  void add(const std::string& key, bool value) { items_.emplace_back(key, value ? "true" : "false"); }

  void print(std::ostream& out, bool sorted) const {
    auto items = items_;
    if (sorted) std::stable_sort(items.begin(), items.end());
    for (const auto& [k, v] : items) out << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

int cmd_validate(const std::string& path) {
  const auto g = load_graph(path);
  std::cout << "valid n=" << g.dimension() << " order=" << g.order() << '\n';
  return 0;
}

int cmd_analyze(const std::string& path, bool records) {
  const auto g = load_graph(path);
  const Classification cls(g);
  const auto& lattice = cls.lattice();
  const int n = g.dimension();
  const bool resolved = !cls.first_unknown(n);
  const auto f = fingerprint(cls);
  Records r;
  r.add("n", n);
  r.add("order", g.order());
  r.add("bipartite", f.bipartite);
  r.add("supercontracted", is_supercontracted(g));
  r.add("closed", to_string(f.closed));
  r.add("singular_manifold", to_string(is_singular_manifold(cls)));
  r.add("sphere", to_string(sphere_status(g).verdict));
  r.add("chi_hatM", f.euler_quasi);
  r.add("chi_M", f.euler_manifold ? std::to_string(*f.euler_manifold) : "?");
  r.add("h1", f.h1.to_string());
  if (resolved) {
    const auto summary = singular_summary(cls);
    r.add("chi_S", summary.euler);
    r.add("singular_dimension", summary.dimension ? std::to_string(*summary.dimension) : "empty");
    r.add("boundary_components", summary.components.size());
  } else {
    r.add("chi_S", "?");
    r.add("singular_dimension", "?");
    r.add("boundary_components", "?");
  }
  for (int h = 0; h <= n; ++h) {
    r.add("residues_" + std::to_string(h), lattice.count_of_size(h));
    if (h >= 3) {
      r.add("singular_" + std::to_string(h), cls.count(h, ResidueClass::Singular));
      r.add("unknown_" + std::to_string(h), cls.count(h, ResidueClass::Unknown));
    }
  }
  const auto gd = g_degree(g);
  r.add("omega_G", gd.omega.to_string());
  if (gd.omega_reduced) r.add("omega_G_reduced", *gd.omega_reduced);
  if (gd.rho) r.add("rho_G", *gd.rho);
  if (gd.checks) r.add("gdegree_checks", gd.checks->all() ? "pass" : "fail");
  r.print(std::cout, records);
  if (!records) {
    std::cout << "\ncolors g\n";
    for (std::uint32_t mask = 1; mask < (1u << g.num_colors()); ++mask) {
      const ColorSet cs{mask};
      std::cout << cs.to_string() << ' ' << lattice.count(cs) << '\n';
    }
  }
  if (!resolved) {
    std::cerr << "gemkit: " << UnresolvedResidue(lattice.id(*cls.first_unknown(n))).what() << '\n';
    return kUnresolved;
  }
  return 0;
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text, char sep) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) throw CLI::ValidationError("expected two values separated by '" + std::string(1, sep) + "'");
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
}

int cmd_gdegree(const std::string& path, bool records) {
  const auto g = load_graph(path);
  const auto gd = g_degree(g);
  Records r;
  for (const auto& [eps, rho] : gd.per_permutation) {
    std::string key = "rho_(";
    for (std::size_t i = 0; i < eps.size(); ++i) key += (i ? " " : "") + std::to_string(eps[i]);
    r.add(key + ")", rho.to_string());
  }
  r.add("omega_G", gd.omega.to_string());
  if (gd.omega_reduced) r.add("omega_G_reduced", *gd.omega_reduced);
  if (gd.rho) r.add("rho_G", *gd.rho);
  if (gd.checks) {
    r.add("check_closed_form", gd.checks->closed_form);
    r.add("check_multiple_of_three", gd.checks->multiple_of_three);
    r.add("check_relation_per_color", gd.checks->relation_per_color);
    r.add("check_subdegree", gd.checks->subdegree);
  }
  r.print(std::cout, records);
  return 0;
}

int cmd_group(const std::string& path, int color, const std::string& target, bool h1_only) {
  const auto g = load_graph(path);
  GroupPresentation pres;
  if (target == "full") {
    pres = full_presentation(g);
  } else if (target == "cgroup") {
    pres = c_group_presentation(g, color);
  } else {
    pres = pi1_presentation(g, color, target == "M" ? Target::M : Target::HatM);
  }
  if (!h1_only) std::cout << to_text(pres);
  std::cout << "h1=" << homology_h1(pres).to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gemkit: colored graphs representing compact manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  std::string input;
  auto* validate = app.add_subcommand("validate", "parse and validate a GEM file");
  validate->add_option("file", input, "GEM file, - for stdin")->required();

  auto* analyze = app.add_subcommand("analyze", "invariants and singular-set report");
  analyze->add_option("file", input)->required();

  auto* transform = app.add_subcommand("transform", "apply moves in argument order and print GEM");
  transform->add_option("file", input)->required();
  std::vector<int> suspend_colors;
  std::vector<int> inflate_counts;
  std::vector<std::string> cancels;
  std::vector<std::string> sums;
  std::uint64_t seed = 1;
  transform->add_option("--suspend", suspend_colors, "suspend along color c")->allow_extra_args(false);
  transform->add_option("--inflate", inflate_counts, "add k random ordinary dipoles")->allow_extra_args(false);
  transform->add_option("--seed", seed, "seed for --inflate");
  transform->add_flag("--simplify", "cancel ordinary dipoles until none remain");
  transform->add_flag("--internalize", "add n-dipoles until an internal vertex exists");
  transform->add_option("--cancel", cancels, "cancel the dipole u,v")->allow_extra_args(false);
  transform->add_option("--connected-sum", sums, "FILE:v:w, sum at v (current) and w (FILE)")
      ->allow_extra_args(false);

  auto* gdegree = app.add_subcommand("gdegree", "regular genera and G-degree");
  gdegree->add_option("file", input)->required();

  auto* group = app.add_subcommand("group", "group presentation and H1");
  group->add_option("file", input)->required();
  int color = 0;
  std::string target = "M";
  bool h1_only = false;
  group->add_option("--color", color, "color c");
  group->add_option("--target", target, "M, hatM, cgroup or full")
      ->check(CLI::IsMember({"M", "hatM", "cgroup", "full"}));
  group->add_flag("--h1-only", h1_only, "print only H1");

  auto* classify = app.add_subcommand("classify", "name the manifold (order <= 6, n <= 4)");
  classify->add_option("file", input)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorph-free census");
  CensusParams params;
  CensusBudget budget;
  std::string eq = "color-permuting";
  std::string output;
  enumerate_cmd->add_option("--n", params.n, "dimension")->required();
  enumerate_cmd->add_option("--order", params.order, "vertex count")->required();
  enumerate_cmd->add_option("--eq", eq)->check(CLI::IsMember({"color-permuting", "color-preserving"}));
  enumerate_cmd->add_flag("--supercontracted", params.supercontracted);
  enumerate_cmd->add_flag("--bipartite", params.bipartite_only);
  enumerate_cmd->add_flag("--nonbipartite", params.nonbipartite_only);
  enumerate_cmd->add_flag("--no-ordinary-dipoles", params.no_ordinary_dipoles);
  enumerate_cmd->add_option("--max-n", budget.max_n, "budget on n");
  enumerate_cmd->add_option("--max-order", budget.max_order, "budget on order");
  enumerate_cmd->add_option("-o,--output", output, "write the catalogue here instead of stdout");

  auto* report = app.add_subcommand("report", "census report of a catalogue file");
  report->add_option("catalogue", input)->required();

  auto* dot = app.add_subcommand("export-dot", "DOT rendering");
  dot->add_option("file", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  const bool records = format == "records";

  try {
    if (*validate) return cmd_validate(input);
    if (*analyze) return cmd_analyze(input, records);
    if (*gdegree) return cmd_gdegree(input, records);
    if (*group) return cmd_group(input, color, target, h1_only);
    if (*dot) {
      std::cout << export_dot(load_graph(input));
      return 0;
    }
    if (*classify) {
      std::cout << classify_small(load_graph(input)) << '\n';
      return 0;
    }
    if (*report) {
      Catalogue cat;
      try {
        cat = parse_catalogue(read_input(input));
      } catch (const std::invalid_argument& e) {
        throw InputError(input + ": " + e.what());
      }
      std::cout << "# census report n=" << cat.params.n << " order=" << cat.params.order
                << " eq=" << to_string(cat.params.equivalence)
                << " filters=" << cat.params.filters() << '\n';
      std::cout << to_text(census_report(cat));
      return 0;
    }
    if (*enumerate_cmd) {
      params.equivalence = parse_equivalence(eq);
      const auto cat = enumerate(params, budget, default_threads());
      if (output.empty()) {
        std::cout << to_text(cat);
      } else {
        std::ofstream out(output);
        out << to_text(cat);
        if (!out) throw InputError("cannot write " + output);
      }
      return 0;
    }
    if (*transform) {
      ColoredGraph g = load_graph(input);
      std::map<std::string, std::size_t> used;
      for (const CLI::Option* opt : transform->parse_order()) {
        const std::string name = opt->get_name();
        const std::size_t i = used[name]++;
        if (name == "--suspend") {
          g = suspend(g, suspend_colors.at(i));
        } else if (name == "--inflate") {
          g = inflate(g, inflate_counts.at(i), seed + i);
        } else if (name == "--simplify") {
          const auto result = simplify(g);
          g = result.graph;
          if (!result.complete) std::cerr << "gemkit: simplify stopped early\n";
        } else if (name == "--internalize") {
          g = internalize(g);
        } else if (name == "--cancel") {
          const auto [u, v] = parse_pair(cancels.at(i), ',');
          const auto d = dipole_at(g, u, v);
          if (!d) throw MoveError(MoveError::Kind::NotADipole, cancels.at(i) + " is not a dipole");
          g = cancel_dipole(g, *d);
        } else if (name == "--connected-sum") {
          const std::string& arg = sums.at(i);
          const auto colon = arg.find(':');
          if (colon == std::string::npos) throw CLI::ValidationError("--connected-sum expects FILE:v:w");
          const auto [v, w] = parse_pair(arg.substr(colon + 1), ':');
          g = connected_sum(g, v, load_graph(arg.substr(0, colon)), w);
        }
      }
      std::cout << to_gem(g);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kInput;
  } catch (const UnresolvedResidue& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kUnresolved;
  } catch (const HypothesisViolated& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kUnresolved;
  } catch (const BudgetExceeded& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kBudget;
  } catch (const OutOfTableRange& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gemkit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
