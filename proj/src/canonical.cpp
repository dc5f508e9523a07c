#include "ft/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ft {

ColoredGraph containment_graph(const SimplicialComplex& g) {
    ColoredGraph cg;
    cg.n = static_cast<int>(g.size());
    cg.adj.assign(cg.n, {});
    cg.color.assign(cg.n, 0);
    for (int i = 0; i < cg.n; ++i) {
        cg.color[i] = g.simplex(i).dim();
        // neighbors: comparable simplices, read off the closure/star masks
        for (int j : SimplexSet(g, g.closure_mask(i)).members())
            if (j != i) cg.adj[i].push_back(j);
        for (int j : SimplexSet(g, g.star_mask(i)).members())
            if (j != i) cg.adj[i].push_back(j);
        std::sort(cg.adj[i].begin(), cg.adj[i].end());
    }
    return cg;
}

namespace {

// One Weisfeiler-Leman pass to the fixpoint; new ids are assigned in
// signature order on every round, so the result is label-invariant and
// always densely renumbered from 0.
std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> color) {
    int classes = -1;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.adj[v].size());
            for (int w : g.adj[v]) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            groups[{color[v], std::move(nb)}].push_back(v);
        }
        int id = 0;
        for (auto& [sig, verts] : groups) {
            for (int v : verts) color[v] = id;
            ++id;
        }
        if (static_cast<int>(groups.size()) == classes) return color;
        classes = static_cast<int>(groups.size());
    }
}

bool is_discrete(const std::vector<int>& color, int n) {
    std::vector<char> seen(n, 0);
    for (int c : color) {
        if (seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

std::string partition_signature(const std::vector<int>& color) {
    std::map<int, int> hist;
    for (int c : color) hist[c]++;
    std::string s;
    for (auto& [c, k] : hist) {
        s += std::to_string(c);
        s += ':';
        s += std::to_string(k);
        s += ';';
    }
    return s;
}

} // namespace

std::string canonical_key(const SimplicialComplex& g) {
    ColoredGraph cg = containment_graph(g);
    std::vector<int> color = refine_colors(cg, cg.color);
    while (!is_discrete(color, cg.n)) {
        // first non-singleton class
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < cg.n; ++v) classes[color[v]].push_back(v);
        const std::vector<int>* cell = nullptr;
        for (auto& [c, verts] : classes)
            if (verts.size() > 1) {
                cell = &verts;
                break;
            }
        // individualize the member whose refined partition signature is
        // smallest; ties fall to the first, which may cost cache hits but
        // never correctness
        std::vector<int> best;
        std::string best_sig;
        for (int v : *cell) {
            std::vector<int> c2 = color;
            for (auto& c : c2) c *= 2;
            c2[v] -= 1; // fresh color just below its class
            std::vector<int> r = refine_colors(cg, c2);
            std::string sig = partition_signature(r);
            if (best.empty() || sig < best_sig) {
                best = std::move(r);
                best_sig = std::move(sig);
            }
        }
        color = std::move(best);
    }
    std::vector<int> order(cg.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<int> pos(cg.n);
    for (int i = 0; i < cg.n; ++i) pos[order[i]] = i;

    std::string key;
    key.reserve(cg.n * (cg.n / 8 + 2) + 16);
    key += std::to_string(cg.n);
    key += '|';
    for (int v : order) {
        key += std::to_string(cg.color[v]);
        key += ',';
    }
    key += '|';
    // adjacency bitmatrix rows in canonical order
    for (int i = 0; i < cg.n; ++i) {
        int v = order[i];
        std::vector<char> row((cg.n + 7) / 8, 0);
        for (int w : cg.adj[v]) row[pos[w] >> 3] |= static_cast<char>(1 << (pos[w] & 7));
        key.append(row.begin(), row.end());
    }
    return key;
}

namespace {

// Isomorphism by individualization-refinement on the disjoint union: the
// two sides share color ids, a pivot vertex is individualized against every
// candidate of its class, and refinement prunes mismatching branches. The
// discrete leaves are verified edge-for-edge.
struct IsoSearch {
    ColoredGraph u; // disjoint union; [0, na) is a, [na, na+nb) is b
    int na = 0, nb = 0;

    bool histograms_match(const std::vector<int>& c) const {
        std::map<int, int> ha, hb;
        for (int v = 0; v < na; ++v) ha[c[v]]++;
        for (int v = 0; v < nb; ++v) hb[c[na + v]]++;
        return ha == hb;
    }

    bool verify_leaf(const std::vector<int>& c) const {
        std::vector<int> img(na, -1);
        std::map<int, int> where;
        for (int v = 0; v < nb; ++v) where[c[na + v]] = v;
        for (int v = 0; v < na; ++v) {
            auto it = where.find(c[v]);
            if (it == where.end()) return false;
            img[v] = it->second;
        }
        for (int v = 0; v < na; ++v) {
            if (u.adj[v].size() != u.adj[na + img[v]].size()) return false;
            std::vector<int> mapped;
            for (int w : u.adj[v]) mapped.push_back(na + img[w]);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != u.adj[na + img[v]]) return false;
        }
        return true;
    }

    bool rec(std::vector<int> c) {
        c = refine_colors(u, std::move(c));
        if (!histograms_match(c)) return false;
        // first color class with more than one a-vertex
        std::map<int, std::vector<int>> cells_a, cells_b;
        for (int v = 0; v < na; ++v) cells_a[c[v]].push_back(v);
        for (int v = 0; v < nb; ++v) cells_b[c[na + v]].push_back(na + v);
        for (auto& [color, averts] : cells_a) {
            if (averts.size() <= 1) continue;
            int pivot = averts[0];
            for (int w : cells_b[color]) {
                std::vector<int> c2 = c;
                for (auto& x : c2) x *= 2;
                c2[pivot] -= 1;
                c2[w] -= 1;
                if (rec(std::move(c2))) return true;
            }
            return false; // the pivot must land somewhere in its class
        }
        return verify_leaf(c);
    }
};

bool colored_iso_backtrack(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n != b.n) return false;
    IsoSearch s;
    s.na = a.n;
    s.nb = b.n;
    s.u.n = a.n + b.n;
    s.u.adj.assign(s.u.n, {});
    s.u.color.assign(s.u.n, 0);
    for (int v = 0; v < a.n; ++v) {
        s.u.adj[v] = a.adj[v];
        s.u.color[v] = a.color[v];
    }
    for (int v = 0; v < b.n; ++v) {
        for (int w : b.adj[v]) s.u.adj[a.n + v].push_back(a.n + w);
        std::sort(s.u.adj[a.n + v].begin(), s.u.adj[a.n + v].end());
        s.u.color[a.n + v] = b.color[v];
    }
    return s.rec(s.u.color);
}

} // namespace

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.size() != b.size() || a.dimension() != b.dimension()) return false;
    if (a.f_vector() != b.f_vector()) return false;
    return colored_iso_backtrack(containment_graph(a), containment_graph(b));
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto to_cg = [](const Graph& g) {
        ColoredGraph cg;
        cg.n = static_cast<int>(g.vertex_count());
        cg.adj.assign(cg.n, {});
        cg.color.assign(cg.n, 0);
        const auto& vs = g.vertices();
        for (int i = 0; i < cg.n; ++i)
            for (VertexId w : g.neighbors(vs[i])) {
                int j = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), w) - vs.begin());
                cg.adj[i].push_back(j);
            }
        for (auto& row : cg.adj) std::sort(row.begin(), row.end());
        return cg;
    };
    return colored_iso_backtrack(to_cg(a), to_cg(b));
}

} // namespace ft
