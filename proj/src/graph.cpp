#include "ft/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ft {

Graph::Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);
    for (auto v : vertices_) adj_[v];
    std::set<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("graph: loop edge");
        if (a > b) std::swap(a, b);
        if (!adj_.count(a) || !adj_.count(b))
            throw std::invalid_argument("graph: edge endpoint not a vertex");
        es.insert({a, b});
    }
    edges_.assign(es.begin(), es.end());
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<VertexId> vs(n);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i) {
        vs[i] = i;
        es.push_back({i, (i + 1) % n});
    }
    return Graph(vs, es);
}

Graph Graph::complete(int n) {
    std::vector<VertexId> vs(n);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i) {
        vs[i] = i;
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    }
    return Graph(vs, es);
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<VertexId> vs(n);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i) {
        vs[i] = i;
        if (i + 1 < n) es.push_back({i, i + 1});
    }
    return Graph(vs, es);
}

Graph Graph::star(int rays) {
    if (rays < 1) throw std::invalid_argument("star: need at least one ray");
    std::vector<VertexId> vs{0};
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= rays; ++i) {
        vs.push_back(i);
        es.push_back({0, i});
    }
    return Graph(vs, es);
}

Graph Graph::wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel: rim length >= 3");
    std::vector<VertexId> vs{0};
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= rim; ++i) {
        vs.push_back(i);
        es.push_back({0, i});
        es.push_back({i, i % rim + 1});
    }
    return Graph(vs, es);
}

Graph Graph::edgeless(int n) {
    std::vector<VertexId> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    return Graph(vs, {});
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    auto it = adj_.find(a);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("neighbors: unknown vertex");
    return it->second;
}

Graph Graph::complement() const {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            if (!has_edge(vertices_[i], vertices_[j])) es.push_back({vertices_[i], vertices_[j]});
    return Graph(vertices_, es);
}

Graph Graph::induced(const std::vector<VertexId>& verts) const {
    std::set<VertexId> keep(verts.begin(), verts.end());
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : edges_)
        if (keep.count(a) && keep.count(b)) es.push_back({a, b});
    return Graph(verts, es);
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return true;
    std::set<VertexId> seen{vertices_[0]};
    std::vector<VertexId> stack{vertices_[0]};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : neighbors(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices_.size();
}

namespace {

// Bron-Kerbosch with pivoting over vertex index sets; emits maximal cliques.
void bron_kerbosch(const std::vector<std::vector<int>>& adj, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (int u : P) {
        size_t deg = adj[u].size();
        if (pivot < 0 || deg > best) {
            pivot = u;
            best = deg;
        }
    }
    for (int u : X) {
        size_t deg = adj[u].size();
        if (deg > best) {
            pivot = u;
            best = deg;
        }
    }
    std::vector<int> cands;
    for (int v : P)
        if (pivot < 0 || !std::binary_search(adj[pivot].begin(), adj[pivot].end(), v))
            cands.push_back(v);
    for (int v : cands) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (std::binary_search(adj[v].begin(), adj[v].end(), w)) P2.push_back(w);
        for (int w : X)
            if (std::binary_search(adj[v].begin(), adj[v].end(), w)) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(adj, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
        std::sort(X.begin(), X.end());
    }
}

} // namespace

SimplicialComplex whitney_complex(const Graph& g) {
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (n == 0) return SimplicialComplex();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges()) {
        int ia = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
        int ib = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
        adj[ia].push_back(ib);
        adj[ib].push_back(ia);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> P(n), R;
    for (int i = 0; i < n; ++i) P[i] = i;
    std::vector<std::vector<int>> cliques;
    bron_kerbosch(adj, R, std::move(P), {}, cliques);
    std::vector<std::vector<VertexId>> sets;
    sets.reserve(cliques.size());
    for (auto& c : cliques) {
        std::vector<VertexId> s;
        s.reserve(c.size());
        for (int i : c) s.push_back(vs[i]);
        sets.push_back(std::move(s));
    }
    return SimplicialComplex::closure(sets);
}

Graph complex_to_graph(const SimplicialComplex& g) {
    const int n = static_cast<int>(g.size());
    std::vector<VertexId> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.simplex(i).proper_subset_of(g.simplex(j)) ||
                g.simplex(j).proper_subset_of(g.simplex(i)))
                es.push_back({i, j});
    return Graph(vs, es);
}

SimplicialComplex barycentric_refine(const SimplicialComplex& g) {
    if (g.is_empty()) return g;
    return whitney_complex(complex_to_graph(g));
}

Graph edge_refine(const Graph& g, VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    if (!g.has_edge(a, b)) throw std::invalid_argument("edge_refine: edge absent");
    VertexId nv = g.vertices().back() + 1;
    std::vector<VertexId> vs = g.vertices();
    vs.push_back(nv);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto e : g.edges())
        if (!(e.first == a && e.second == b)) es.push_back(e);
    es.push_back({a, nv});
    es.push_back({b, nv});
    const auto& na = g.neighbors(a);
    for (VertexId w : na)
        if (w != b && g.has_edge(b, w)) es.push_back({w, nv});
    return Graph(vs, es);
}

Graph shannon_product(const Graph& g, const Graph& h) {
    // pair (a,b) encoded as index a_i * |V(h)| + b_i over sorted vertex lists
    const auto& va = g.vertices();
    const auto& vb = h.vertices();
    const int nb = static_cast<int>(vb.size());
    std::vector<VertexId> vs;
    for (size_t i = 0; i < va.size(); ++i)
        for (int j = 0; j < nb; ++j) vs.push_back(static_cast<VertexId>(i * nb + j));
    auto ok = [](const Graph& gr, VertexId x, VertexId y) {
        return x == y || gr.has_edge(x, y);
    };
    std::vector<std::pair<VertexId, VertexId>> es;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            VertexId p = vs[i], q = vs[j];
            VertexId pa = va[p / nb], pb = vb[p % nb];
            VertexId qa = va[q / nb], qb = vb[q % nb];
            if (ok(g, pa, qa) && ok(h, pb, qb)) es.push_back({p, q});
        }
    return Graph(vs, es);
}

SimplicialComplex stanley_reisner_product(const SimplicialComplex& g, const SimplicialComplex& h) {
    if (g.is_empty() || h.is_empty()) return SimplicialComplex();
    const int ng = static_cast<int>(g.size()), nh = static_cast<int>(h.size());
    std::vector<VertexId> vs(ng * nh);
    for (int i = 0; i < ng * nh; ++i) vs[i] = i;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < ng * nh; ++i)
        for (int j = i + 1; j < ng * nh; ++j) {
            const Simplex &x = g.simplex(i / nh), &u = g.simplex(j / nh);
            const Simplex &y = h.simplex(i % nh), &v = h.simplex(j % nh);
            bool fwd = x.subset_of(u) && y.subset_of(v);
            bool bwd = u.subset_of(x) && v.subset_of(y);
            if (fwd || bwd) es.push_back({i, j});
        }
    return whitney_complex(Graph(vs, es));
}

QuotientResult quotient(const Graph& g, const std::vector<std::vector<VertexId>>& classes) {
    std::map<VertexId, VertexId> rep;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("quotient: empty class");
        VertexId r = *std::min_element(cls.begin(), cls.end());
        for (VertexId v : cls) {
            if (!g.has_vertex(v)) throw std::invalid_argument("quotient: class member not a vertex");
            if (rep.count(v)) throw std::invalid_argument("quotient: classes overlap");
            rep[v] = r;
        }
    }
    for (VertexId v : g.vertices())
        if (!rep.count(v)) throw std::invalid_argument("quotient: partition does not cover vertices");
    QuotientResult out;
    std::vector<VertexId> vs;
    for (auto& [v, r] : rep)
        if (v == r) vs.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : g.edges()) {
        VertexId ra = rep[a], rb = rep[b];
        if (ra == rb) {
            out.collapsed_edge = true;
            continue;
        }
        es.push_back({std::min(ra, rb), std::max(ra, rb)});
    }
    out.graph = Graph(vs, es);
    return out;
}

bool is_continuous_graph_map(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h) {
    for (VertexId v : g.vertices()) {
        auto it = f.find(v);
        if (it == f.end()) throw std::invalid_argument("graph map: not total");
        if (!h.has_vertex(it->second)) throw std::invalid_argument("graph map: image vertex missing");
    }
    for (auto [a, b] : g.edges()) {
        VertexId fa = f.at(a), fb = f.at(b);
        if (fa != fb && !h.has_edge(fa, fb)) return false;
    }
    return true;
}

} // namespace ft
