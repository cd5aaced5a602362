#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "relaxcol/coloring.hpp"
#include "relaxcol/errors.hpp"
#include "relaxcol/graph.hpp"

namespace relaxcol {

// On-disk instance: DIMACS-style "p edge n m" (or "p multiedge n m"),
// a "c scheme k r" extension line, and 1-based "e u v [t]" edge lines.
struct Instance {
  std::variant<Graph, Multigraph> graph;
  ColorScheme scheme;

  bool is_multigraph() const { return std::holds_alternative<Multigraph>(graph); }
  int vertex_count() const;
  std::int64_t edge_total() const;  // |E| with multiplicity
};

Instance parse_instance(std::string_view text);

std::string serialize_instance(const Graph& g, const ColorScheme& s);
std::string serialize_instance(const Multigraph& g, const ColorScheme& s);
std::string serialize_instance(const Instance& inst);

// Coloring files: one "v color" line per vertex, v 1-based, colors 0-based.
Coloring parse_coloring(std::string_view text, int n, int k);
std::string serialize_coloring(const Coloring& c);

}  // namespace relaxcol
