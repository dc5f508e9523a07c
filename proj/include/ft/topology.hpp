#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ft/complex.hpp"
#include "ft/graph.hpp"

namespace ft {

/// Star U(x) = { y : x subset y }, the minimal open neighborhood of x.
SimplexSet star(const SimplicialComplex& g, const Simplex& x);
SimplexSet star(const SimplicialComplex& g, int idx);

/// Core W^-(x): the closure of {x}, all nonempty subsets of x. Always closed.
SimplexSet core(const SimplicialComplex& g, const Simplex& x);
SimplexSet core(const SimplicialComplex& g, int idx);

/// Unit ball B(x) = closure(U(x)); unit sphere S(x) = B(x) \ U(x).
SimplexSet unit_ball(const SimplicialComplex& g, const Simplex& x);
SimplexSet unit_ball(const SimplicialComplex& g, int idx);
SimplexSet unit_sphere(const SimplicialComplex& g, const Simplex& x);
SimplexSet unit_sphere(const SimplicialComplex& g, int idx);

/// The star basis: U(x) for every simplex x.
std::vector<SimplexSet> star_basis(const SimplicialComplex& g);

struct Topology {
    const SimplicialComplex* host = nullptr;
    std::vector<SimplexSet> opens; // includes the empty set and the full set
};

struct TopologyResult {
    bool complete = false;
    size_t count = 0;        // open sets found so far
    std::optional<Topology> topology;
};

/// Enumerates all open sets by closing the star basis under binary union
/// (the basis is already intersection-closed) and adjoining the empty set.
/// Stops cleanly once more than `limit` opens are found; `complete` is then
/// false and `count` holds the partial tally.
TopologyResult enumerate_topology(const SimplicialComplex& g, size_t limit = 1000000,
                                  bool keep_sets = true);

/// Up-set / down-set predicates; decided in O(|A| * dim), never by enumeration.
bool is_open(const SimplicialComplex& g, const SimplexSet& a);
bool is_closed(const SimplicialComplex& g, const SimplexSet& a);

/// A is locally closed when closure(A) \ A is closed (equivalently, A is
/// open in its closure).
bool is_locally_closed(const SimplicialComplex& g, const SimplexSet& a);

/// Topological boundary: closure(A) intersect closure(complement), which for
/// open A reduces to closure(A) \ A. Always closed.
SimplexSet boundary(const SimplicialComplex& g, const SimplexSet& a);

bool is_connected(const SimplicialComplex& g);
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& g);

struct SeparationReport {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
};

/// Direct pairwise witness search over the star basis; the closed form
/// (t0 always, t1 = t2 = dim <= 0) is asserted against it.
SeparationReport separation_report(const SimplicialComplex& g);

/// Nerve dimension of the vertex-star cover {U({v})}. For clique complexes
/// this equals the maximal dimension.
int topological_dimension(const SimplicialComplex& g);

/// Cover members become vertices 0..k-1; edge when the pair intersects.
/// Throws when the sets do not cover g.
Graph cech_nerve_graph(const SimplicialComplex& g, const std::vector<SimplexSet>& cover);

} // namespace ft
