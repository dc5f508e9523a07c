#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ft/simplex.hpp"

namespace ft {

class SimplexSet;

/// f-vector: counts[k] = number of k-dimensional simplices.
using FVector = std::vector<std::int64_t>;

/// A finite abstract simplicial complex: a downward-closed finite set of
/// simplices, stored in canonical order (by dimension, then lexicographic).
/// Immutable after construction; all derived structure (faces, cofaces,
/// closure and star masks) is built eagerly.
class SimplicialComplex {
public:
    SimplicialComplex() { finish(); } // the empty complex, the (-1)-sphere

    /// Downward closure of a collection of vertex sets.
    /// Rejects inputs containing the empty set. Idempotent and monotone.
    static SimplicialComplex closure(const std::vector<std::vector<VertexId>>& sets);

    /// Builds from a list of simplices that is already downward closed;
    /// throws if closedness fails.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    size_t size() const { return simplices_.size(); }
    bool is_empty() const { return simplices_.empty(); }

    /// -1 for the empty complex, else the maximal simplex dimension.
    int dimension() const { return dim_; }

    FVector f_vector() const;

    const Simplex& simplex(int idx) const { return simplices_[idx]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    /// Canonical index of a simplex, or -1.
    int index_of(const Simplex& s) const {
        auto it = index_.find(s.vertices());
        return it == index_.end() ? -1 : it->second;
    }

    const std::vector<VertexId>& vertex_list() const { return vertices_; }
    size_t vertex_count() const { return vertices_.size(); }

    /// Codimension-1 faces / cofaces by canonical index.
    const std::vector<std::int32_t>& faces_of(int idx) const { return faces_[idx]; }
    const std::vector<std::int32_t>& cofaces_of(int idx) const { return cofaces_[idx]; }

    /// Locally maximal: not contained in a strictly larger simplex.
    bool is_locally_maximal(int idx) const { return cofaces_[idx].empty(); }

    std::vector<Simplex> facets() const;

    /// Number of 64-bit words per SimplexSet bitmask.
    int words() const { return words_; }

    const std::uint64_t* closure_mask(int idx) const { return closure_masks_.data() + static_cast<size_t>(idx) * words_; }
    const std::uint64_t* star_mask(int idx) const { return star_masks_.data() + static_cast<size_t>(idx) * words_; }

    /// Total parity sum; see characteristics module for the general case.
    std::int64_t euler_characteristic() const;

    bool operator==(const SimplicialComplex& o) const { return simplices_ == o.simplices_; }

private:
    void finish(); // sorts, indexes, builds faces/cofaces and masks

    std::vector<Simplex> simplices_;
    std::unordered_map<std::vector<VertexId>, int, VertexVecHash> index_;
    std::vector<VertexId> vertices_;
    std::vector<std::vector<std::int32_t>> faces_, cofaces_;
    std::vector<std::uint64_t> closure_masks_, star_masks_;
    int words_ = 1;
    int dim_ = -1;
};

/// An arbitrary subset of a host complex's simplices. May be open, closed,
/// or neither. Stored as a bitset over the host's canonical order.
class SimplexSet {
public:
    SimplexSet() : host_(nullptr) {}
    explicit SimplexSet(const SimplicialComplex& host)
        : host_(&host), bits_(host.words(), 0) {}
    SimplexSet(const SimplicialComplex& host, const std::uint64_t* raw)
        : host_(&host), bits_(raw, raw + host.words()) {}

    static SimplexSet full(const SimplicialComplex& host);

    const SimplicialComplex& host() const { return *host_; }
    bool has_host() const { return host_ != nullptr; }

    void add(int idx) { bits_[idx >> 6] |= (1ull << (idx & 63)); }
    void remove(int idx) { bits_[idx >> 6] &= ~(1ull << (idx & 63)); }
    bool test(int idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1; }

    size_t count() const;
    bool empty() const;

    std::vector<int> members() const;

    SimplexSet unite(const SimplexSet& o) const;
    SimplexSet intersect(const SimplexSet& o) const;
    SimplexSet minus(const SimplexSet& o) const;
    SimplexSet complement() const;
    bool subset_of(const SimplexSet& o) const;

    /// Smallest closed set (sub-complex) containing the members.
    SimplexSet closure() const;

    /// Members as a standalone complex; requires the set to be closed.
    SimplicialComplex as_complex() const;

    /// Downward closure of members, materialized as a complex.
    SimplicialComplex closure_complex() const;

    bool operator==(const SimplexSet& o) const { return bits_ == o.bits_; }

    const std::vector<std::uint64_t>& raw() const { return bits_; }

private:
    const SimplicialComplex* host_;
    std::vector<std::uint64_t> bits_;
};

// ---- constructors and algebra on complexes ----

int dimension(const SimplicialComplex& g);
FVector f_vector(const SimplicialComplex& g);

/// Zykov join. H's vertices are relabeled above G's maximum; the result
/// contains G, relabeled H, and all unions x+y.
SimplicialComplex join(const SimplicialComplex& g, const SimplicialComplex& h);

/// Join with the two-point complex S0.
SimplicialComplex suspension(const SimplicialComplex& g);
SimplicialComplex double_suspension(const SimplicialComplex& g);

/// Wedge sum: disjoint relabel, then identify basepoints x0 in G and y0 in H.
SimplicialComplex wedge_sum(const SimplicialComplex& g, VertexId x0,
                            const SimplicialComplex& h, VertexId y0);

/// All simplices of dimension <= k (k >= -1).
SimplicialComplex skeleton(const SimplicialComplex& g, int k);

/// The two-point complex {a},{b}.
SimplicialComplex zero_sphere();

} // namespace ft
