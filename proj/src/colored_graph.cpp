#include "gemkit/colored_graph.hpp"

#include <charconv>
#include <sstream>

#include "gemkit/union_find.hpp"

namespace gemkit {

std::string ColorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Color c : colors()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

GraphError::GraphError(Kind kind, const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what
                                  : what),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::Syntax: return "syntax";
    case GraphError::Kind::NotInvolution: return "not-involution";
    case GraphError::Kind::FixedPoint: return "fixed-point";
    case GraphError::Kind::Disconnected: return "disconnected";
    case GraphError::Kind::OddOrder: return "odd-order";
  }
  return "unknown";
}

ColoredGraph::ColoredGraph(int dimension, std::vector<std::vector<Vertex>> matchings)
    : dimension_(dimension) {
  if (dimension < 1 || dimension + 1 > kMaxColors) {
    throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxColors - 1));
  }
  if (static_cast<int>(matchings.size()) != dimension + 1) {
    throw std::invalid_argument("expected " + std::to_string(dimension + 1) + " matchings, got " +
                                std::to_string(matchings.size()));
  }
  order_ = static_cast<int>(matchings.front().size());
  if (order_ < 2 || order_ % 2 != 0) {
    throw GraphError(GraphError::Kind::OddOrder,
                     "order must be even and at least 2, got " + std::to_string(order_));
  }
  adjacency_.reserve(static_cast<std::size_t>(order_) * (dimension + 1));
  for (int c = 0; c <= dimension; ++c) {
    const auto& m = matchings[c];
    if (static_cast<int>(m.size()) != order_) {
      throw std::invalid_argument("matching " + std::to_string(c) + " has wrong length");
    }
    for (Vertex v = 0; v < order_; ++v) {
      const Vertex w = m[v];
      if (w < 0 || w >= order_) {
        throw std::invalid_argument("color " + std::to_string(c) + ": image of " +
                                    std::to_string(v) + " out of range");
      }
      if (w == v) {
        throw GraphError(GraphError::Kind::FixedPoint,
                         "color " + std::to_string(c) + " fixes vertex " + std::to_string(v));
      }
      if (m[w] != v) {
        throw GraphError(GraphError::Kind::NotInvolution,
                         "color " + std::to_string(c) + " is not an involution at vertex " +
                             std::to_string(v));
      }
    }
    adjacency_.insert(adjacency_.end(), m.begin(), m.end());
  }
  if (count_components(matchings, order_) != 1) {
    throw GraphError(GraphError::Kind::Disconnected, "graph is not connected");
  }
}

ColoredGraph ColoredGraph::dipole_graph(int dimension) {
  return ColoredGraph(dimension,
                      std::vector<std::vector<Vertex>>(dimension + 1, std::vector<Vertex>{1, 0}));
}

ColorSet ColoredGraph::colors_between(Vertex u, Vertex v) const {
  ColorSet s;
  for (Color c = 0; c < num_colors(); ++c) {
    if (neighbor(u, c) == v) s = s.with(c);
  }
  return s;
}

std::vector<std::vector<Vertex>> ColoredGraph::matchings() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_colors());
  for (Color c = 0; c < num_colors(); ++c) {
    auto m = matching(c);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

ColoredGraph ColoredGraph::relabeled(std::span<const Vertex> perm) const {
  std::vector<std::vector<Vertex>> out(num_colors(), std::vector<Vertex>(order_));
  for (Color c = 0; c < num_colors(); ++c) {
    for (Vertex v = 0; v < order_; ++v) out[c][perm[v]] = perm[neighbor(v, c)];
  }
  return ColoredGraph(dimension_, std::move(out));
}

ColoredGraph ColoredGraph::recolored(std::span<const Color> color_order) const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_colors());
  for (Color c : color_order) {
    auto m = matching(c);
    out.emplace_back(m.begin(), m.end());
  }
  return ColoredGraph(dimension_, std::move(out));
}

std::vector<Vertex> Bipartition::first() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(side.size()); ++v) {
    if (side[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Bipartition::second() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(side.size()); ++v) {
    if (side[v] == 1) out.push_back(v);
  }
  return out;
}

std::optional<Bipartition> bipartition(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Color c = 0; c < g.num_colors(); ++c) {
      const Vertex w = g.neighbor(v, c);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  return Bipartition{std::move(side)};
}

int count_components(std::span<const std::vector<Vertex>> matchings, int order) {
  UnionFind uf(order);
  for (const auto& m : matchings) {
    for (Vertex v = 0; v < order; ++v) uf.unite(v, m[v]);
  }
  return uf.num_sets();
}

namespace {

// Line-oriented scanner for GEM text that keeps 1-based positions.
class GemScanner {
 public:
  explicit GemScanner(std::string_view text) : text_(text) {}

  // Advances to the next line holding content; false at end of input.
  bool next_line() {
    while (pos_ < text_.size()) {
      const auto end = text_.find('\n', pos_);
      std::string_view raw = text_.substr(pos_, end == std::string_view::npos ? end : end - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++line_no_;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      line_ = raw;
      cursor_ = 0;
      skip_space();
      if (cursor_ < line_.size()) return true;
    }
    return false;
  }

  bool at_line_end() {
    skip_space();
    return cursor_ >= line_.size();
  }

  std::string_view word() {
    skip_space();
    const std::size_t begin = cursor_;
    while (cursor_ < line_.size() && !is_space(line_[cursor_]) && line_[cursor_] != ':') ++cursor_;
    return line_.substr(begin, cursor_ - begin);
  }

  int integer(const char* what) {
    skip_space();
    const int col = column();
    const std::string_view w = word();
    int value = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (w.empty() || ec != std::errc() || p != w.data() + w.size()) {
      throw error(std::string("expected ") + what + ", found '" + std::string(w) + "'", col);
    }
    return value;
  }

  void expect(char ch) {
    skip_space();
    if (cursor_ >= line_.size() || line_[cursor_] != ch) {
      throw error(std::string("expected '") + ch + "'", column());
    }
    ++cursor_;
  }

  int column() const { return static_cast<int>(cursor_) + 1; }
  int line_number() const { return line_no_; }

  GraphError error(const std::string& what, int col) const {
    return GraphError(GraphError::Kind::Syntax, what, line_no_, col);
  }

 private:
  static bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }
  void skip_space() {
    while (cursor_ < line_.size() && is_space(line_[cursor_])) ++cursor_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
  std::string_view line_;
  std::size_t cursor_ = 0;
};

}  // namespace

ColoredGraph parse_gem(std::string_view text) {
  GemScanner scan(text);
  if (!scan.next_line()) throw GraphError(GraphError::Kind::Syntax, "empty input", 1, 1);
  {
    const int col = scan.column();
    if (scan.word() != "gem") throw scan.error("expected header 'gem <n> <order>'", col);
  }
  const int n_col = scan.column();
  const int n = scan.integer("dimension");
  const int order_col = scan.column();
  const int order = scan.integer("order");
  if (!scan.at_line_end()) throw scan.error("trailing tokens after header", scan.column());
  if (n < 1 || n + 1 > kMaxColors) throw scan.error("dimension out of range", n_col);
  if (order < 2) throw scan.error("order must be at least 2", order_col);
  if (order % 2 != 0) {
    throw GraphError(GraphError::Kind::OddOrder, "order " + std::to_string(order) + " is odd",
                     scan.line_number(), order_col);
  }

  std::vector<std::vector<Vertex>> matchings(n + 1);
  for (int seen = 0; seen <= n; ++seen) {
    if (!scan.next_line()) {
      throw GraphError(GraphError::Kind::Syntax,
                       "expected " + std::to_string(n + 1) + " color lines, found " +
                           std::to_string(seen),
                       scan.line_number() + 1, 1);
    }
    const int c_col = scan.column();
    const int c = scan.integer("color");
    if (c < 0 || c > n) throw scan.error("color " + std::to_string(c) + " out of range", c_col);
    if (!matchings[c].empty()) throw scan.error("duplicate color " + std::to_string(c), c_col);
    scan.expect(':');
    std::vector<Vertex> images;
    images.reserve(order);
    while (!scan.at_line_end()) {
      const int col = scan.column();
      const int img = scan.integer("vertex");
      if (img < 0 || img >= order) {
        throw scan.error("vertex " + std::to_string(img) + " out of range", col);
      }
      images.push_back(img);
    }
    if (static_cast<int>(images.size()) != order) {
      throw scan.error("color " + std::to_string(c) + " lists " + std::to_string(images.size()) +
                           " images, expected " + std::to_string(order),
                       scan.column());
    }
    matchings[c] = std::move(images);
  }
  if (scan.next_line()) throw scan.error("unexpected content after color lines", scan.column());
  return ColoredGraph(n, std::move(matchings));
}

std::string to_gem(const ColoredGraph& g) {
  std::ostringstream out;
  out << "gem " << g.dimension() << ' ' << g.order() << '\n';
  for (Color c = 0; c < g.num_colors(); ++c) {
    out << c << ':';
    for (Vertex w : g.matching(c)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

ColoredGraph parse_code(std::string_view code) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const auto semi = code.find(';', start);
    fields.push_back(code.substr(start, semi == std::string_view::npos ? semi : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  auto number = [&](std::string_view s, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
      throw GraphError(GraphError::Kind::Syntax,
                       std::string("bad ") + what + " '" + std::string(s) + "' in code");
    }
    return value;
  };
  if (fields.size() < 3) throw GraphError(GraphError::Kind::Syntax, "code has too few fields");
  const int n = number(fields[0], "dimension");
  const int order = number(fields[1], "order");
  if (n < 1 || n + 1 > kMaxColors) throw GraphError(GraphError::Kind::Syntax, "bad dimension");
  if (order < 2) throw GraphError(GraphError::Kind::Syntax, "order must be at least 2");
  if (order % 2 != 0) throw GraphError(GraphError::Kind::OddOrder, "odd order in code");
  if (static_cast<int>(fields.size()) != n + 3) {
    throw GraphError(GraphError::Kind::Syntax, "code must list " + std::to_string(n + 1) +
                                                   " matchings");
  }
  std::vector<std::vector<Vertex>> matchings(n + 1);
  for (int c = 0; c <= n; ++c) {
    std::string_view list = fields[c + 2];
    for (std::size_t start = 0;;) {
      const auto comma = list.find(',', start);
      const int img =
          number(list.substr(start, comma == std::string_view::npos ? comma : comma - start),
                 "vertex");
      if (img < 0 || img >= order) throw GraphError(GraphError::Kind::Syntax, "vertex out of range");
      matchings[c].push_back(img);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(matchings[c].size()) != order) {
      throw GraphError(GraphError::Kind::Syntax, "matching has wrong length in code");
    }
  }
  return ColoredGraph(n, std::move(matchings));
}

std::string to_code(const ColoredGraph& g) {
  std::string out = std::to_string(g.dimension()) + ';' + std::to_string(g.order());
  for (Color c = 0; c < g.num_colors(); ++c) {
    out += ';';
    bool first = true;
    for (Vertex w : g.matching(c)) {
      if (!first) out += ',';
      out += std::to_string(w);
      first = false;
    }
  }
  return out;
}

}  // namespace gemkit
