#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ft/complex.hpp"
#include "ft/exact.hpp"

namespace ft {

/// Exterior derivative as a full n x n matrix over the canonical simplex
/// order, with the global ascending-vertex orientation:
/// D[x][y] = sign(y,x) for codimension-1 faces y of x, where sign is
/// (-1)^i and i is the 0-based position in x of the vertex missing from y.
/// Satisfies D*D = 0.
IntMatrix exterior_derivative(const SimplicialComplex& g);

/// Per-degree boundary block: rows are k-simplices, columns (k-1)-simplices.
IntMatrix boundary_block(const SimplicialComplex& g, int k);

/// Hodge Laplacian L = (D + D^T)^2 restricted to degree k; block sizes
/// follow the f-vector.
std::vector<IntMatrix> hodge_blocks(const SimplicialComplex& g);

/// Exact rational kernel dimensions of the Hodge blocks.
std::vector<int> betti(const SimplicialComplex& g);

/// sum (-1)^k f_k = sum (-1)^k b_k, exactly.
bool euler_poincare_check(const SimplicialComplex& g);

/// |str(exp(-t L)) - chi| < 1e-8, via a floating eigendecomposition.
bool mckean_singer_check(const SimplicialComplex& g, double t);

/// Betti numbers of the interaction (Wu) cohomology: the bigraded complex
/// on ordered pairs of intersecting simplices, graded by total cardinality
/// |x| + |y|, with the two partial derivatives deleting from either factor
/// and entries kept only when the image pair still intersects. One entry
/// per total-cardinality level, ascending. The pair complex grows
/// quadratically; computations whose interaction complex exceeds
/// `max_pairs` throw BudgetExceeded instead of running for hours.
std::vector<int> wu_betti(const SimplicialComplex& g, std::size_t max_pairs = 500000);

/// A total map between the simplices of two complexes. Maps lifted from
/// vertex maps carry the vertex map, which koopman/lefschetz need for
/// permutation signs.
class SimplexMap {
public:
    static SimplexMap from_vertex_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                      const std::map<VertexId, VertexId>& vmap);
    static SimplexMap from_images(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                  std::vector<int> image_indices);
    static SimplexMap identity(const SimplicialComplex& g);
    static SimplexMap constant(const SimplicialComplex& dom, const SimplicialComplex& cod,
                               const Simplex& value);

    const SimplicialComplex& dom() const { return *dom_; }
    const SimplicialComplex& cod() const { return *cod_; }
    int image_index(int idx) const { return image_[idx]; }
    const Simplex& image(int idx) const { return cod_->simplex(image_[idx]); }
    const std::optional<std::map<VertexId, VertexId>>& vertex_map() const { return vmap_; }

private:
    SimplexMap() = default;
    const SimplicialComplex* dom_ = nullptr;
    const SimplicialComplex* cod_ = nullptr;
    std::vector<int> image_;
    std::optional<std::map<VertexId, VertexId>> vmap_;
};

/// Preimages of basis stars are open (equivalent to the full definition).
bool is_continuous(const SimplexMap& f);

/// Comes from a vertex-to-vertex assignment: vertices map to vertices and
/// f(x) is the union of the vertex images. Simplicial implies continuous.
bool is_simplicial(const SimplexMap& f);

/// Koopman matrix of a self-map: row x has sign(f|x) in column f(x) when
/// the dimension is preserved, zero rows where it drops. The supertrace is
/// the fixed-point index sum.
IntMatrix koopman(const SimplexMap& f);

/// Graded supertrace of the Koopman action on harmonic forms, computed
/// from exact rational kernel and image bases.
std::int64_t lefschetz_number(const SimplexMap& f);

/// sum over fixed simplices of omega(x) sign(f|x).
std::int64_t fixed_point_index_sum(const SimplexMap& f);

/// Lefschetz fixed point formula: index sum equals the Lefschetz number.
bool lefschetz_check(const SimplexMap& f);

} // namespace ft
