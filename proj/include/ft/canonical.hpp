#pragma once

#include <string>
#include <vector>

#include "ft/complex.hpp"
#include "ft/graph.hpp"

namespace ft {

/// Containment graph of a complex with dimension colors; complexes are
/// isomorphic exactly when these colored graphs are.
struct ColoredGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted neighbor lists
    std::vector<int> color;
};

ColoredGraph containment_graph(const SimplicialComplex& g);

/// Deterministic key from color refinement with ordered-partition
/// individualization. Equal keys imply isomorphic complexes (the key
/// encodes the full adjacency under the discovered order); isomorphic
/// complexes usually, but not provably always, get equal keys, which only
/// costs a cache miss.
std::string canonical_key(const SimplicialComplex& g);

/// Exact isomorphism of complexes (backtracking over refinement classes).
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Exact isomorphism of simple graphs.
bool graphs_isomorphic(const Graph& a, const Graph& b);

} // namespace ft
