#pragma once

#include <map>
#include <string>

#include "ft/complex.hpp"
#include "ft/exact.hpp"
#include "ft/graph.hpp"

namespace ft {

/// Facet-list format: {"facets": [[int,...], ...]}; the downward closure is
/// applied on load.
SimplicialComplex load_complex(const std::string& path);
SimplicialComplex complex_from_json_text(const std::string& text);
std::string complex_to_json_text(const SimplicialComplex& g);
void save_complex(const SimplicialComplex& g, const std::string& path);

/// Graph format: {"vertices": [...], "edges": [[a,b], ...]}.
Graph load_graph(const std::string& path);
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

/// Vertex map format: {"map": {"0": 1, ...}} or {"map": [[0,1], ...]}.
std::map<VertexId, VertexId> load_vertex_map(const std::string& path);

std::string matrix_to_csv(const IntMatrix& m);
std::string matrix_to_json_text(const IntMatrix& m, const SimplicialComplex& legend);

} // namespace ft
