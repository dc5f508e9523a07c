#include "ft/characteristics.hpp"

#include <stdexcept>

#include "ft/topology.hpp"

namespace ft {

std::int64_t euler(const SimplexSet& a) {
    std::int64_t chi = 0;
    for (int idx : a.members()) chi += a.host().simplex(idx).parity();
    return chi;
}

std::int64_t euler(const SimplicialComplex& g) {
    return g.euler_characteristic();
}

namespace {

// Weighted tuple count by exact intersection value. S is the closure of A
// under pairwise intersection (all values an m-fold intersection can take,
// always simplices of the host since the host is downward closed). With
// W(s) = sum of parities over members of A containing s, the number of
// m-tuples with intersection exactly s is
//   E(s) = W(s)^m - sum of E(t) over t in S strictly containing s,
// and wu_m(A) = sum of E(s) over s in S with s a member of A.
std::int64_t wu_poset(const SimplexSet& a, int m) {
    const SimplicialComplex& g = a.host();
    std::vector<int> mem = a.members();
    if (mem.empty()) return 0;

    SimplexSet in_s(g);
    std::vector<int> order; // S as host indices, discovery order
    for (int i : mem) {
        if (!in_s.test(i)) {
            in_s.add(i);
            order.push_back(i);
        }
    }
    // close under pairwise intersection
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            auto cap = Simplex::intersect(g.simplex(order[i]), g.simplex(order[j]));
            if (!cap) continue;
            int k = g.index_of(*cap);
            if (k < 0) throw std::logic_error("wu: intersection escaped the host complex");
            if (!in_s.test(k)) {
                in_s.add(k);
                order.push_back(k);
            }
        }
    }

    // sort S by descending cardinality so strict supersets come first
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return g.simplex(x).card() > g.simplex(y).card();
    });

    std::vector<std::int64_t> e_of(g.size(), 0);
    std::int64_t total = 0;
    for (size_t oi = 0; oi < order.size(); ++oi) {
        int s = order[oi];
        std::int64_t w = 0;
        // members of A containing s = star(s) restricted to A
        const std::uint64_t* st = g.star_mask(s);
        for (int y : mem)
            if ((st[y >> 6] >> (y & 63)) & 1) w += g.simplex(y).parity();
        std::int64_t pw = 1;
        for (int i = 0; i < m; ++i) pw *= w;
        // subtract tuples whose intersection strictly contains s
        std::int64_t sub = 0;
        for (size_t oj = 0; oj < oi; ++oj) {
            int t = order[oj];
            if (t == s) continue;
            if (g.simplex(t).card() <= g.simplex(s).card()) continue;
            if ((st[t >> 6] >> (t & 63)) & 1) sub += e_of[t];
        }
        e_of[s] = pw - sub;
        if (a.test(s)) total += e_of[s];
    }
    return total;
}

} // namespace

std::int64_t wu(const SimplexSet& a, int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("wu: supported orders are 1..4");
    if (m == 1) return euler(a);
    return wu_poset(a, m);
}

std::int64_t wu(const SimplicialComplex& g, int m) {
    return wu(SimplexSet::full(g), m);
}

std::int64_t wu_fast(const SimplicialComplex& g, int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("wu_fast: supported orders are 1..4");
    std::int64_t total = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        int idx = static_cast<int>(i);
        total += g.simplex(idx).parity() * wu(star(g, idx), m);
    }
    return total;
}

bool ball_formula_check(const SimplicialComplex& g) {
    for (int m = 1; m <= 2; ++m) {
        std::int64_t whole = wu(g, m);
        std::int64_t via_star = 0, via_ball = 0, via_sphere = 0;
        for (size_t i = 0; i < g.size(); ++i) {
            int idx = static_cast<int>(i);
            int w = g.simplex(idx).parity();
            via_star += w * wu(star(g, idx), m);
            via_ball += w * wu(unit_ball(g, idx), m);
            via_sphere += w * wu(unit_sphere(g, idx), m);
        }
        if (via_star != whole || via_ball != whole || via_sphere != 0) return false;
    }
    return true;
}

std::int64_t relative_wu(const SimplicialComplex& g, const SimplexSet& h) {
    if (!(&h.host() == &g)) throw std::invalid_argument("relative_wu: H must live in G");
    if (!is_closed(g, h)) throw std::invalid_argument("relative_wu: H is not a subcomplex");
    std::int64_t total = 0;
    const int words = g.words();
    for (int y : h.members()) {
        // x meets y iff x lies in some vertex star of y
        std::vector<std::uint64_t> meet(words, 0);
        for (VertexId v : g.simplex(y).vertices()) {
            const std::uint64_t* st = g.star_mask(g.index_of(Simplex{v}));
            for (int w = 0; w < words; ++w) meet[w] |= st[w];
        }
        SimplexSet ms(g, meet.data());
        total += g.simplex(y).parity() * euler(ms);
    }
    return total;
}

int fermi_characteristic(const SimplicialComplex& g) {
    int odd = 0;
    for (const auto& s : g.simplices())
        if (s.parity() < 0) odd ^= 1;
    return odd ? -1 : 1;
}

} // namespace ft
