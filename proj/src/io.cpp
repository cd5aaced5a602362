#include "relaxcol/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>
#include <vector>

namespace relaxcol {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t parse_int(const std::string& tok, int line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

int Instance::vertex_count() const {
  return std::visit([](const auto& g) { return g.vertex_count(); }, graph);
}

std::int64_t Instance::edge_total() const {
  if (is_multigraph()) return std::get<Multigraph>(graph).total_multiplicity();
  return std::get<Graph>(graph).edge_count();
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  bool have_p = false, multigraph = false;
  int n = 0;
  std::int64_t m = 0;
  bool have_scheme = false;
  ColorScheme scheme;

  struct Row {
    int u, v;
    std::int64_t t;
    int line;
  };
  std::vector<Row> rows;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "c") {
      if (tokens.size() >= 2 && tokens[1] == "scheme") {
        if (tokens.size() != 4) throw ParseError(lineno, "scheme line needs 'c scheme k r'");
        if (have_scheme) throw ParseError(lineno, "duplicate scheme line");
        scheme.k = static_cast<int>(parse_int(tokens[2], lineno, "color count"));
        scheme.r = static_cast<int>(parse_int(tokens[3], lineno, "relaxed count"));
        if (scheme.k < 1 || scheme.r < 0 || scheme.r > scheme.k)
          throw ParseError(lineno, "scheme requires k >= 1 and 0 <= r <= k");
        have_scheme = true;
      }
      continue;  // other comments ignored
    }

    if (tokens[0] == "p") {
      if (have_p) throw ParseError(lineno, "duplicate problem line");
      if (tokens.size() != 4) throw ParseError(lineno, "problem line needs 'p edge n m'");
      if (tokens[1] == "edge")
        multigraph = false;
      else if (tokens[1] == "multiedge")
        multigraph = true;
      else
        throw ParseError(lineno, "unknown format '" + tokens[1] + "' (use edge or multiedge)");
      std::int64_t n64 = parse_int(tokens[2], lineno, "vertex count");
      m = parse_int(tokens[3], lineno, "edge count");
      if (n64 < 0 || m < 0) throw ParseError(lineno, "negative counts in problem line");
      if (n64 > 10'000'000) throw ParseError(lineno, "vertex count too large");
      n = static_cast<int>(n64);
      have_p = true;
      continue;
    }

    if (tokens[0] == "e") {
      if (!have_p) throw ParseError(lineno, "edge line before problem line");
      if (tokens.size() != 3 && tokens.size() != 4)
        throw ParseError(lineno, "edge line needs 'e u v' or 'e u v t'");
      if (tokens.size() == 4 && !multigraph)
        throw ParseError(lineno, "multiplicity given on a non-multigraph instance");
      std::int64_t u = parse_int(tokens[1], lineno, "vertex id");
      std::int64_t v = parse_int(tokens[2], lineno, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop rejected");
      std::int64_t t = 1;
      if (tokens.size() == 4) {
        t = parse_int(tokens[3], lineno, "multiplicity");
        if (t < 1) throw ParseError(lineno, "multiplicity must be positive");
      }
      rows.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), t, lineno});
      continue;
    }

    throw ParseError(lineno, "unrecognized line '" + tokens[0] + "'");
  }

  if (!have_p) throw ParseError(lineno, "missing problem line");
  if (!have_scheme) throw ParseError(lineno, "missing 'c scheme k r' line");
  if (static_cast<std::int64_t>(rows.size()) != m)
    throw ParseError(lineno, "problem line announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(rows.size()));

  // duplicate pairs are reported with the line of the later occurrence
  {
    std::vector<Row> sorted = rows;
    for (Row& row : sorted)
      if (row.u > row.v) std::swap(row.u, row.v);
    std::sort(sorted.begin(), sorted.end(), [](const Row& a, const Row& b) {
      return std::tie(a.u, a.v, a.line) < std::tie(b.u, b.v, b.line);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v)
        throw ParseError(sorted[i].line, "duplicate edge");
  }

  Instance inst{Graph(n), scheme};
  if (multigraph) {
    Multigraph mg(n);
    for (const Row& row : rows) mg.add_edge(row.u, row.v, row.t);
    inst.graph = std::move(mg);
  } else {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(rows.size());
    for (const Row& row : rows) pairs.push_back({row.u, row.v});
    inst.graph = Graph::from_pairs(n, std::move(pairs));
  }
  return inst;
}

std::string serialize_instance(const Graph& g, const ColorScheme& s) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  out << "c scheme " << s.k << ' ' << s.r << '\n';
  for (const VertexPair& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string serialize_instance(const Multigraph& g, const ColorScheme& s) {
  std::ostringstream out;
  out << "p multiedge " << g.vertex_count() << ' ' << g.pair_count() << '\n';
  out << "c scheme " << s.k << ' ' << s.r << '\n';
  for (const auto& e : g.edges())
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.multiplicity << '\n';
  return out.str();
}

std::string serialize_instance(const Instance& inst) {
  return std::visit([&](const auto& g) { return serialize_instance(g, inst.scheme); },
                    inst.graph);
}

Coloring parse_coloring(std::string_view text, int n, int k) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  Coloring c(static_cast<std::size_t>(n), -1);
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens.size() != 2) throw ParseError(lineno, "coloring line needs 'v color'");
    std::int64_t v = parse_int(tokens[0], lineno, "vertex id");
    std::int64_t color = parse_int(tokens[1], lineno, "color");
    if (v < 1 || v > n) throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
    if (color < 0 || color >= k)
      throw ParseError(lineno, "color out of range 0.." + std::to_string(k - 1));
    if (c[v - 1] != -1) throw ParseError(lineno, "vertex colored twice");
    c[v - 1] = static_cast<int>(color);
  }
  for (int v = 0; v < n; ++v)
    if (c[v] < 0)
      throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " left uncolored");
  return c;
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
  return out.str();
}

}  // namespace relaxcol
