#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ft {

using VertexId = std::int32_t;

/// A simplex: a nonempty, strictly ascending list of vertex identifiers.
/// Dimension is cardinality minus one; parity() is (-1)^dimension.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
        normalize();
    }

    Simplex(std::initializer_list<VertexId> vertices)
        : v_(vertices) {
        normalize();
    }

    const std::vector<VertexId>& vertices() const { return v_; }
    int card() const { return static_cast<int>(v_.size()); }
    int dim() const { return card() - 1; }

    /// omega(x) = (-1)^dim(x)
    int parity() const { return dim() % 2 == 0 ? 1 : -1; }

    bool empty() const { return v_.empty(); }

    bool contains(VertexId v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    /// subset-or-equal test against another simplex
    bool subset_of(const Simplex& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool proper_subset_of(const Simplex& other) const {
        return card() < other.card() && subset_of(other);
    }

    /// Intersection as a vertex set; empty optional when disjoint.
    static std::optional<Simplex> intersect(const Simplex& a, const Simplex& b) {
        std::vector<VertexId> out;
        std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                              std::back_inserter(out));
        if (out.empty()) return std::nullopt;
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    static Simplex unite(const Simplex& a, const Simplex& b) {
        std::vector<VertexId> out;
        std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                       std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    /// Removes the vertex at the given position (0-based in ascending order).
    Simplex erase_at(int pos) const {
        Simplex s;
        s.v_ = v_;
        s.v_.erase(s.v_.begin() + pos);
        return s;
    }

    bool operator==(const Simplex& o) const { return v_ == o.v_; }
    bool operator!=(const Simplex& o) const { return v_ != o.v_; }

    /// Canonical order: by cardinality, then lexicographic on vertices.
    bool operator<(const Simplex& o) const {
        if (v_.size() != o.v_.size()) return v_.size() < o.v_.size();
        return v_ < o.v_;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

private:
    void normalize() {
        if (v_.empty()) throw std::invalid_argument("simplex must be nonempty");
        std::sort(v_.begin(), v_.end());
        auto it = std::unique(v_.begin(), v_.end());
        if (it != v_.end()) throw std::invalid_argument("simplex has duplicate vertices");
        for (VertexId v : v_)
            if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
    }

    std::vector<VertexId> v_;
};

struct VertexVecHash {
    size_t operator()(const std::vector<VertexId>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace ft
