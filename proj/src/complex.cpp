#include "ft/complex.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace ft {

namespace {

// Enumerates all nonempty subsets of s, invoking fn on each.
template <typename Fn>
void each_nonempty_subset(const Simplex& s, Fn&& fn) {
    const auto& v = s.vertices();
    const int n = s.card();
    if (n > 24) throw std::domain_error("simplex dimension too large for subset enumeration");
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        std::vector<VertexId> sub;
        sub.reserve(std::popcount(m));
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) sub.push_back(v[i]);
        fn(Simplex(std::move(sub)));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::closure(const std::vector<std::vector<VertexId>>& sets) {
    std::set<std::vector<VertexId>> acc;
    for (const auto& raw : sets) {
        if (raw.empty()) throw std::invalid_argument("closure: the empty set is not a simplex");
        Simplex top(raw);
        each_nonempty_subset(top, [&](Simplex s) { acc.insert(s.vertices()); });
    }
    SimplicialComplex g;
    g.simplices_.reserve(acc.size());
    for (auto& v : acc) g.simplices_.emplace_back(Simplex(v));
    g.finish();
    return g;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    SimplicialComplex g;
    g.simplices_ = std::move(simplices);
    g.finish();
    for (size_t i = 0; i < g.simplices_.size(); ++i) {
        const Simplex& s = g.simplices_[i];
        if (s.card() == 1) continue;
        for (int p = 0; p < s.card(); ++p)
            if (!g.contains(s.erase_at(p)))
                throw std::invalid_argument("from_simplices: set is not downward closed at " + s.str());
    }
    return g;
}

void SimplicialComplex::finish() {
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());

    const int n = static_cast<int>(simplices_.size());
    index_.clear();
    index_.reserve(n * 2);
    dim_ = -1;
    std::set<VertexId> vs;
    for (int i = 0; i < n; ++i) {
        index_.emplace(simplices_[i].vertices(), i);
        dim_ = std::max(dim_, simplices_[i].dim());
        for (VertexId v : simplices_[i].vertices()) vs.insert(v);
    }
    vertices_.assign(vs.begin(), vs.end());

    words_ = std::max(1, (n + 63) / 64);
    closure_masks_.assign(static_cast<size_t>(n) * words_, 0);
    star_masks_.assign(static_cast<size_t>(n) * words_, 0);
    faces_.assign(n, {});
    cofaces_.assign(n, {});

    for (int i = 0; i < n; ++i) {
        const Simplex& s = simplices_[i];
        std::uint64_t* cl = closure_masks_.data() + static_cast<size_t>(i) * words_;
        each_nonempty_subset(s, [&](const Simplex& sub) {
            int j = index_of(sub);
            if (j < 0) throw std::invalid_argument("complex is not downward closed at " + sub.str());
            cl[j >> 6] |= 1ull << (j & 63);
            star_masks_[static_cast<size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
            if (sub.card() == s.card() - 1) {
                faces_[i].push_back(j);
                cofaces_[j].push_back(i);
            }
        });
    }
}

FVector SimplicialComplex::f_vector() const {
    FVector f(dim_ + 1, 0);
    for (const auto& s : simplices_) f[s.dim()]++;
    return f;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (size_t i = 0; i < simplices_.size(); ++i)
        if (cofaces_[i].empty()) out.push_back(simplices_[i]);
    return out;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& s : simplices_) chi += s.parity();
    return chi;
}

// ---- SimplexSet ----

SimplexSet SimplexSet::full(const SimplicialComplex& host) {
    SimplexSet s(host);
    const int n = static_cast<int>(host.size());
    for (int w = 0; w < host.words(); ++w) {
        int lo = w * 64;
        int hi = std::min(n - lo, 64);
        if (hi <= 0) break;
        s.bits_[w] = (hi == 64) ? ~0ull : ((1ull << hi) - 1);
    }
    return s;
}

size_t SimplexSet::count() const {
    size_t c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

bool SimplexSet::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

std::vector<int> SimplexSet::members() const {
    std::vector<int> out;
    for (size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t m = bits_[w];
        while (m) {
            int b = std::countr_zero(m);
            out.push_back(static_cast<int>(w * 64 + b));
            m &= m - 1;
        }
    }
    return out;
}

SimplexSet SimplexSet::unite(const SimplexSet& o) const {
    SimplexSet r(*host_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

SimplexSet SimplexSet::intersect(const SimplexSet& o) const {
    SimplexSet r(*host_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

SimplexSet SimplexSet::minus(const SimplexSet& o) const {
    SimplexSet r(*host_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
}

SimplexSet SimplexSet::complement() const {
    return full(*host_).minus(*this);
}

bool SimplexSet::subset_of(const SimplexSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

SimplexSet SimplexSet::closure() const {
    SimplexSet r(*host_);
    const int w = host_->words();
    for (int idx : members()) {
        const std::uint64_t* cl = host_->closure_mask(idx);
        for (int i = 0; i < w; ++i) r.bits_[i] |= cl[i];
    }
    return r;
}

SimplicialComplex SimplexSet::as_complex() const {
    SimplexSet cl = closure();
    if (!(cl == *this)) throw std::domain_error("as_complex: set is not closed");
    std::vector<Simplex> out;
    for (int idx : members()) out.push_back(host_->simplex(idx));
    return SimplicialComplex::from_simplices(std::move(out));
}

SimplicialComplex SimplexSet::closure_complex() const {
    std::vector<Simplex> out;
    for (int idx : closure().members()) out.push_back(host_->simplex(idx));
    return SimplicialComplex::from_simplices(std::move(out));
}

// ---- algebra ----

int dimension(const SimplicialComplex& g) { return g.dimension(); }
FVector f_vector(const SimplicialComplex& g) { return g.f_vector(); }

SimplicialComplex join(const SimplicialComplex& g, const SimplicialComplex& h) {
    if (g.is_empty()) return h;
    if (h.is_empty()) return g;
    VertexId offset = g.vertex_list().back() + 1;
    std::vector<Simplex> out;
    out.reserve(g.size() + h.size() + g.size() * h.size());
    for (const auto& x : g.simplices()) out.push_back(x);
    std::vector<Simplex> hr;
    hr.reserve(h.size());
    for (const auto& y : h.simplices()) {
        std::vector<VertexId> v = y.vertices();
        for (auto& t : v) t += offset;
        hr.emplace_back(std::move(v));
    }
    for (const auto& y : hr) out.push_back(y);
    for (const auto& x : g.simplices())
        for (const auto& y : hr) out.push_back(Simplex::unite(x, y));
    return SimplicialComplex::from_simplices(std::move(out));
}

SimplicialComplex zero_sphere() {
    return SimplicialComplex::closure({{0}, {1}});
}

SimplicialComplex suspension(const SimplicialComplex& g) {
    return join(g, zero_sphere());
}

SimplicialComplex double_suspension(const SimplicialComplex& g) {
    return suspension(suspension(g));
}

SimplicialComplex wedge_sum(const SimplicialComplex& g, VertexId x0,
                            const SimplicialComplex& h, VertexId y0) {
    if (!g.contains(Simplex{x0})) throw std::invalid_argument("wedge_sum: basepoint missing in G");
    if (!h.contains(Simplex{y0})) throw std::invalid_argument("wedge_sum: basepoint missing in H");
    VertexId offset = g.is_empty() ? 0 : g.vertex_list().back() + 1;
    std::vector<Simplex> out;
    for (const auto& x : g.simplices()) out.push_back(x);
    for (const auto& y : h.simplices()) {
        std::vector<VertexId> v = y.vertices();
        for (auto& t : v) t = (t == y0) ? x0 : t + offset;
        out.emplace_back(std::move(v));
    }
    return SimplicialComplex::from_simplices(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& g, int k) {
    if (k < -1) throw std::invalid_argument("skeleton: k must be >= -1");
    std::vector<Simplex> out;
    for (const auto& s : g.simplices())
        if (s.dim() <= k) out.push_back(s);
    return SimplicialComplex::from_simplices(std::move(out));
}

} // namespace ft
