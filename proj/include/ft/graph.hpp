#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ft/complex.hpp"
#include "ft/simplex.hpp"

namespace ft {

/// A finite simple graph: vertex set plus a set of unordered edges.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph path(int n);          // n vertices, n-1 edges
    static Graph star(int rays);       // center 0 plus `rays` leaves
    static Graph wheel(int rim);       // hub 0 plus a rim cycle of length `rim`
    static Graph edgeless(int n);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    size_t vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return edges_.size(); }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId a, VertexId b) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;

    Graph complement() const;
    Graph induced(const std::vector<VertexId>& verts) const;

    bool is_connected() const;

private:
    std::vector<VertexId> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_; // each pair (a,b) with a < b, sorted
    std::map<VertexId, std::vector<VertexId>> adj_;
};

/// Whitney (clique) complex: all vertex sets of complete subgraphs.
SimplicialComplex whitney_complex(const Graph& g);

/// The graph G1 of a complex: vertices are the simplices (by canonical
/// index), edges are strict containment pairs.
Graph complex_to_graph(const SimplicialComplex& g);

/// Whitney complex of the containment graph; preserves Euler characteristic
/// and dimension.
SimplicialComplex barycentric_refine(const SimplicialComplex& g);

/// Splits edge e=(a,b): new vertex v joined to a, b and the common
/// neighborhood S(a) cap S(b); e removed.
Graph edge_refine(const Graph& g, VertexId a, VertexId b);

/// Shannon (strong) product: vertices V(G) x V(H); two distinct pairs are
/// adjacent when both coordinate projections land on an edge or a vertex.
Graph shannon_product(const Graph& g, const Graph& h);

/// Whitney complex of the graph on simplex pairs (x,y), adjacency by
/// componentwise containment one way or the other.
SimplicialComplex stanley_reisner_product(const SimplicialComplex& g, const SimplicialComplex& h);

struct QuotientResult {
    Graph graph;
    bool collapsed_edge = false; // some class contained an edge; it was dropped
};

/// Collapses each class to a single vertex (the class minimum). Loops are
/// dropped; parallel edges merged. Throws on malformed partitions.
QuotientResult quotient(const Graph& g, const std::vector<std::vector<VertexId>>& classes);

/// True when every edge maps to an edge of h or to a single vertex.
bool is_continuous_graph_map(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h);

} // namespace ft
