#include "ft/energy.hpp"

#include <stdexcept>

#include "ft/characteristics.hpp"
#include "ft/topology.hpp"

namespace ft {

IntMatrix connection_matrix(const SimplicialComplex& g) {
    if (g.is_empty()) throw std::invalid_argument("connection_matrix: empty complex");
    const int n = static_cast<int>(g.size());
    IntMatrix l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool meets = Simplex::intersect(g.simplex(i), g.simplex(j)).has_value();
            l.at(i, j) = l.at(j, i) = meets ? 1 : 0;
        }
    return l;
}

namespace {

std::vector<SimplexSet> regions_of(const SimplicialComplex& g, Region region) {
    std::vector<SimplexSet> r;
    r.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        int idx = static_cast<int>(i);
        switch (region) {
            case Region::Star: r.push_back(star(g, idx)); break;
            case Region::Sphere: r.push_back(unit_sphere(g, idx)); break;
            case Region::Ball: r.push_back(unit_ball(g, idx)); break;
        }
    }
    return r;
}

} // namespace

IntMatrix green_matrix(const SimplicialComplex& g, int m, Region region) {
    if (m < 1 || m > 2) throw std::invalid_argument("green_matrix: supported orders are 1, 2");
    const int n = static_cast<int>(g.size());
    IntMatrix out(n, n);
    std::vector<SimplexSet> r = regions_of(g, region);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::int64_t v = g.simplex(i).parity() * g.simplex(j).parity() *
                             wu(r[i].intersect(r[j]), m);
            out.at(i, j) = out.at(j, i) = static_cast<long long>(v);
        }
    }
    return out;
}

std::int64_t energy_sum(const SimplicialComplex& g, int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("energy_sum: supported orders are 1..4");
    const int n = static_cast<int>(g.size());
    if (m <= 2) return green_matrix(g, m, Region::Star).sum();
    std::vector<SimplexSet> stars = regions_of(g, Region::Star);
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SimplexSet uij = stars[i].intersect(stars[j]);
            if (uij.empty()) continue;
            for (int k = 0; k < n; ++k) {
                if (m == 3) {
                    std::int64_t w = wu(uij.intersect(stars[k]), 3);
                    total += g.simplex(i).parity() * g.simplex(j).parity() *
                             g.simplex(k).parity() * w;
                } else {
                    SimplexSet uijk = uij.intersect(stars[k]);
                    if (uijk.empty()) continue;
                    for (int l = 0; l < n; ++l) {
                        std::int64_t w = wu(uijk.intersect(stars[l]), 4);
                        total += g.simplex(i).parity() * g.simplex(j).parity() *
                                 g.simplex(k).parity() * g.simplex(l).parity() * w;
                    }
                }
            }
        }
    return total;
}

std::int64_t curvature(const SimplicialComplex& g, const Simplex& x) {
    int idx = g.index_of(x);
    if (idx < 0) throw std::invalid_argument("curvature: simplex not in complex");
    return g.simplex(idx).parity() * euler(star(g, idx));
}

std::int64_t weighted_energy(const SimplexSet& a, const IntMatrix& h) {
    const SimplicialComplex& g = a.host();
    if (h.rows != static_cast<int>(g.size()) || h.cols != h.rows)
        throw std::invalid_argument("weighted_energy: h must be square over the simplices");
    std::vector<int> mem = a.members();
    std::int64_t total = 0;
    for (int i : mem)
        for (int j : mem) {
            if (!h.at(i, j)) continue;
            auto cap = Simplex::intersect(g.simplex(i), g.simplex(j));
            if (!cap) continue;
            int k = g.index_of(*cap);
            if (k >= 0 && a.test(k)) total += h.at(i, j);
        }
    return total;
}

bool general_energy_check(const SimplicialComplex& g, const IntMatrix& h) {
    const int n = static_cast<int>(g.size());
    std::vector<SimplexSet> stars = regions_of(g, Region::Star);
    std::int64_t lhs = weighted_energy(SimplexSet::full(g), h);
    std::int64_t rhs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rhs += g.simplex(i).parity() * g.simplex(j).parity() *
                   weighted_energy(stars[i].intersect(stars[j]), h);
    return lhs == rhs;
}

NullityReport nullity_report(const SimplicialComplex& g) {
    NullityReport rep;
    rep.g1 = nullity_exact(green_matrix(g, 1, Region::Star));
    rep.b1 = nullity_exact(green_matrix(g, 1, Region::Ball));
    rep.s1 = nullity_exact(green_matrix(g, 1, Region::Sphere));
    rep.g2 = nullity_exact(green_matrix(g, 2, Region::Star));
    rep.b2 = nullity_exact(green_matrix(g, 2, Region::Ball));
    rep.s2 = nullity_exact(green_matrix(g, 2, Region::Sphere));
    return rep;
}

} // namespace ft
