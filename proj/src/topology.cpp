#include "ft/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ft {

namespace {

int require_index(const SimplicialComplex& g, const Simplex& x) {
    int idx = g.index_of(x);
    if (idx < 0) throw std::invalid_argument("simplex " + x.str() + " is not in the complex");
    return idx;
}

struct BitsHash {
    size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace

SimplexSet star(const SimplicialComplex& g, int idx) {
    return SimplexSet(g, g.star_mask(idx));
}
SimplexSet star(const SimplicialComplex& g, const Simplex& x) {
    return star(g, require_index(g, x));
}

SimplexSet core(const SimplicialComplex& g, int idx) {
    return SimplexSet(g, g.closure_mask(idx));
}
SimplexSet core(const SimplicialComplex& g, const Simplex& x) {
    return core(g, require_index(g, x));
}

SimplexSet unit_ball(const SimplicialComplex& g, int idx) {
    return star(g, idx).closure();
}
SimplexSet unit_ball(const SimplicialComplex& g, const Simplex& x) {
    return unit_ball(g, require_index(g, x));
}

SimplexSet unit_sphere(const SimplicialComplex& g, int idx) {
    return unit_ball(g, idx).minus(star(g, idx));
}
SimplexSet unit_sphere(const SimplicialComplex& g, const Simplex& x) {
    return unit_sphere(g, require_index(g, x));
}

std::vector<SimplexSet> star_basis(const SimplicialComplex& g) {
    std::vector<SimplexSet> basis;
    basis.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) basis.push_back(star(g, static_cast<int>(i)));
    return basis;
}

TopologyResult enumerate_topology(const SimplicialComplex& g, size_t limit, bool keep_sets) {
    TopologyResult res;
    std::unordered_set<std::vector<std::uint64_t>, BitsHash> seen;
    std::vector<SimplexSet> work;

    auto push = [&](const SimplexSet& s) {
        if (seen.insert(s.raw()).second) work.push_back(s);
        return seen.size() <= limit;
    };

    if (!push(SimplexSet(g))) {} // empty set, always fits
    std::vector<SimplexSet> basis = star_basis(g);
    for (const auto& b : basis)
        if (!push(b)) {
            res.count = seen.size();
            return res;
        }

    // Close under union with basis elements; unions of opens reduce to
    // unions of stars, so this worklist reaches the full fixpoint.
    for (size_t i = 0; i < work.size(); ++i) {
        SimplexSet cur = work[i];
        for (const auto& b : basis) {
            SimplexSet u = cur.unite(b);
            if (!push(u)) {
                res.count = seen.size();
                return res;
            }
        }
    }

    res.complete = true;
    res.count = seen.size();
    if (keep_sets) {
        Topology topo;
        topo.host = &g;
        topo.opens = std::move(work);
        res.topology = std::move(topo);
    }
    return res;
}

bool is_open(const SimplicialComplex& g, const SimplexSet& a) {
    for (int idx : a.members())
        for (int c : g.cofaces_of(idx))
            if (!a.test(c)) return false;
    return true;
}

bool is_closed(const SimplicialComplex& g, const SimplexSet& a) {
    for (int idx : a.members())
        for (int f : g.faces_of(idx))
            if (!a.test(f)) return false;
    return true;
}

bool is_locally_closed(const SimplicialComplex& g, const SimplexSet& a) {
    return is_closed(g, a.closure().minus(a));
}

SimplexSet boundary(const SimplicialComplex& g, const SimplexSet& a) {
    if (is_open(g, a)) return a.closure().minus(a);
    return a.closure().intersect(a.complement().closure());
}

namespace {

// Union-find over simplex indices; containment edges generate the
// connectivity relation of the topology.
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

bool is_connected(const SimplicialComplex& g) {
    return connected_components(g).size() <= 1;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& g) {
    const int n = static_cast<int>(g.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int f : g.faces_of(i)) uf.join(i, f);
    std::map<int, std::vector<Simplex>> comps;
    for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(g.simplex(i));
    std::vector<SimplicialComplex> out;
    for (auto& [root, simps] : comps)
        out.push_back(SimplicialComplex::from_simplices(std::move(simps)));
    return out;
}

SeparationReport separation_report(const SimplicialComplex& g) {
    SeparationReport rep{true, true, true};
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n && (rep.t0 || rep.t1 || rep.t2); ++i) {
        SimplexSet ui = star(g, i);
        for (int j = i + 1; j < n; ++j) {
            SimplexSet uj = star(g, j);
            bool i_free = !uj.test(i); // U(x_j) avoids x_i
            bool j_free = !ui.test(j);
            if (!(i_free || j_free)) rep.t0 = false;
            if (!(i_free && j_free)) rep.t1 = false;
            if (!ui.intersect(uj).empty()) rep.t2 = false;
        }
    }
    // closed form: always Kolmogorov; Frechet/Hausdorff iff dimension <= 0
    bool low = g.dimension() <= 0;
    if (rep.t0 != true || rep.t1 != low || rep.t2 != low)
        throw std::logic_error("separation_report: witness search disagrees with closed form");
    return rep;
}

int topological_dimension(const SimplicialComplex& g) {
    if (g.is_empty()) throw std::invalid_argument("topological_dimension: empty complex");
    std::vector<SimplexSet> cover;
    for (VertexId v : g.vertex_list()) cover.push_back(star(g, Simplex{v}));
    Graph nerve = cech_nerve_graph(g, cover);
    SimplicialComplex w = whitney_complex(nerve);
    return w.dimension();
}

Graph cech_nerve_graph(const SimplicialComplex& g, const std::vector<SimplexSet>& cover) {
    SimplexSet all(g);
    for (const auto& s : cover) all = all.unite(s);
    if (!(all == SimplexSet::full(g))) throw std::invalid_argument("cech_nerve_graph: not a cover");
    const int k = static_cast<int>(cover.size());
    std::vector<VertexId> vs(k);
    for (int i = 0; i < k; ++i) vs[i] = i;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!cover[i].intersect(cover[j]).empty()) es.push_back({i, j});
    return Graph(vs, es);
}

} // namespace ft
