#include "ft/homeo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ft/canonical.hpp"
#include "ft/characteristics.hpp"
#include "ft/graph.hpp"
#include "ft/hodge.hpp"
#include "ft/topology.hpp"

namespace ft {

namespace {

std::string fmt_vec(const std::vector<int>& v) {
    std::ostringstream ss;
    ss << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) ss << ",";
        ss << v[i];
    }
    ss << ")";
    return ss.str();
}

std::set<std::int64_t> sphere_spectrum(const SimplicialComplex& g) {
    std::set<std::int64_t> spec;
    for (size_t i = 0; i < g.size(); ++i)
        spec.insert(euler(unit_sphere(g, static_cast<int>(i))));
    return spec;
}

constexpr size_t kWuBettiCap = 200; // pair complexes grow quadratically

} // namespace

std::optional<HomeoVerdict> invariant_screen(const SimplicialComplex& g,
                                             const SimplicialComplex& h,
                                             RecognitionEngine& engine) {
    auto fail = [](const std::string& what) {
        return HomeoVerdict{HomeoResult::NotHomeomorphic, "invariant mismatch: " + what};
    };
    if (g.dimension() != h.dimension())
        return fail("dimension " + std::to_string(g.dimension()) + " vs " +
                    std::to_string(h.dimension()));
    if (connected_components(g).size() != connected_components(h).size())
        return fail("component count");
    if (g.euler_characteristic() != h.euler_characteristic())
        return fail("Euler characteristic " + std::to_string(g.euler_characteristic()) + " vs " +
                    std::to_string(h.euler_characteristic()));
    std::int64_t wg = wu(g, 2), wh = wu(h, 2);
    if (wg != wh)
        return fail("Wu characteristic " + std::to_string(wg) + " vs " + std::to_string(wh));
    if (!g.is_empty() && !h.is_empty()) {
        std::vector<int> bg = betti(g), bh = betti(h);
        if (bg != bh) return fail("Betti " + fmt_vec(bg) + " vs " + fmt_vec(bh));
        if (g.size() <= kWuBettiCap && h.size() <= kWuBettiCap) {
            std::vector<int> wbg = wu_betti(g), wbh = wu_betti(h);
            if (wbg != wbh) return fail("Wu-Betti " + fmt_vec(wbg) + " vs " + fmt_vec(wbh));
        }
        if (sphere_spectrum(g) != sphere_spectrum(h)) return fail("sphere spectrum");
        auto mg = engine.manifold_dimension(g);
        bool g_exhausted = engine.last_query_exhausted();
        auto mh = engine.manifold_dimension(h);
        bool h_exhausted = engine.last_query_exhausted();
        if (!g_exhausted && !h_exhausted && mg != mh) return fail("manifold verdict");
    }
    return std::nullopt;
}

namespace {

// Multigraph with loops; vertices are dense 0..n-1.
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> edges; // a < b -> multiplicity
    std::map<int, int> loops;

    std::vector<int> degree() const {
        std::vector<int> d(n, 0);
        for (auto& [e, m] : edges) {
            d[e.first] += m;
            d[e.second] += m;
        }
        for (auto& [v, m] : loops) d[v] += 2 * m;
        return d;
    }
};

bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size() || a.loops.size() != b.loops.size())
        return false;
    std::vector<int> da = a.degree(), db = b.degree();
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> perm(a.n, -1);
    std::vector<char> used(b.n, 0);
    auto loop_of = [](const Multigraph& m, int v) {
        auto it = m.loops.find(v);
        return it == m.loops.end() ? 0 : it->second;
    };
    auto mult_of = [](const Multigraph& m, int x, int y) {
        auto it = m.edges.find({std::min(x, y), std::max(x, y)});
        return it == m.edges.end() ? 0 : it->second;
    };
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || da[v] != db[w] || loop_of(a, v) != loop_of(b, w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (mult_of(a, u, v) != mult_of(b, perm[u], w)) ok = false;
            if (!ok) continue;
            perm[v] = w;
            used[w] = 1;
            if (go(v + 1)) return true;
            used[w] = 0;
            perm[v] = -1;
        }
        return false;
    };
    return go(0);
}

struct OneDimNormalForm {
    int isolated = 0; // single-point components
    int circles = 0;  // pure cycle components, any length
    Multigraph core;  // everything else, degree-2 vertices smoothed away
};

OneDimNormalForm one_dim_normal_form(const SimplicialComplex& g) {
    OneDimNormalForm nf;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& s : g.simplices()) {
        if (s.dim() == 0) adj[s.vertices()[0]];
        if (s.dim() == 1) {
            adj[s.vertices()[0]].push_back(s.vertices()[1]);
            adj[s.vertices()[1]].push_back(s.vertices()[0]);
        }
    }
    // split into components
    std::set<VertexId> seen;
    std::vector<std::vector<VertexId>> comps;
    for (auto& [v, nb] : adj) {
        if (seen.count(v)) continue;
        std::vector<VertexId> comp, stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        comps.push_back(std::move(comp));
    }

    std::vector<VertexId> branch_vertices; // global ids of kept vertices
    std::vector<std::tuple<VertexId, VertexId, int>> kept_edges; // with multiplicity
    std::map<VertexId, int> kept_loops;

    for (auto& comp : comps) {
        if (comp.size() == 1 && adj[comp[0]].empty()) {
            nf.isolated++;
            continue;
        }
        bool all_two = true;
        for (VertexId v : comp)
            if (adj[v].size() != 2) all_two = false;
        if (all_two) {
            nf.circles++;
            continue;
        }
        // smooth: iteratively splice out degree-2 vertices
        std::map<VertexId, std::multiset<VertexId>> m;
        std::map<VertexId, int> loops;
        for (VertexId v : comp)
            for (VertexId w : adj[v])
                if (v < w) {
                    m[v].insert(w);
                    m[w].insert(v);
                }
        for (VertexId v : comp) m[v]; // ensure presence
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = m.begin(); it != m.end(); ++it) {
                VertexId v = it->first;
                int deg = static_cast<int>(it->second.size()) + 2 * (loops.count(v) ? loops[v] : 0);
                if (deg != 2 || it->second.size() != 2) continue;
                auto nb = it->second.begin();
                VertexId a = *nb;
                VertexId b = *std::next(nb);
                // splice v out
                m[a].erase(m[a].find(v));
                m[b].erase(m[b].find(v));
                m.erase(it);
                if (a == b) {
                    loops[a]++;
                } else {
                    m[a].insert(b);
                    m[b].insert(a);
                }
                changed = true;
                break;
            }
        }
        for (auto& [v, nb] : m) branch_vertices.push_back(v);
        std::set<std::pair<VertexId, VertexId>> done;
        for (auto& [v, nb] : m)
            for (VertexId w : nb) {
                if (v > w || done.count({v, w})) continue;
                done.insert({v, w});
                kept_edges.push_back({v, w, static_cast<int>(m[v].count(w))});
            }
        for (auto& [v, k] : loops) kept_loops[v] += k;
    }

    std::map<VertexId, int> dense;
    std::sort(branch_vertices.begin(), branch_vertices.end());
    for (VertexId v : branch_vertices) dense.emplace(v, static_cast<int>(dense.size()));
    nf.core.n = static_cast<int>(dense.size());
    for (auto& [a, b, mult] : kept_edges)
        nf.core.edges[{std::min(dense[a], dense[b]), std::max(dense[a], dense[b])}] = mult;
    for (auto& [v, k] : kept_loops) nf.core.loops[dense[v]] = k;
    return nf;
}

} // namespace

HomeoVerdict one_dim_homeomorphic(const SimplicialComplex& g, const SimplicialComplex& h) {
    if (g.dimension() > 1 || h.dimension() > 1)
        throw std::invalid_argument("one_dim_homeomorphic: inputs must have dimension <= 1");
    if (g.dimension() != h.dimension())
        return {HomeoResult::NotHomeomorphic, "invariant mismatch: dimension"};
    OneDimNormalForm a = one_dim_normal_form(g), b = one_dim_normal_form(h);
    if (a.isolated != b.isolated)
        return {HomeoResult::NotHomeomorphic,
                "normal form: isolated points " + std::to_string(a.isolated) + " vs " +
                    std::to_string(b.isolated)};
    if (a.circles != b.circles)
        return {HomeoResult::NotHomeomorphic, "normal form: circle components " +
                                                  std::to_string(a.circles) + " vs " +
                                                  std::to_string(b.circles)};
    if (!multigraphs_isomorphic(a.core, b.core))
        return {HomeoResult::NotHomeomorphic, "normal form: reduced multigraphs differ"};
    return {HomeoResult::Homeomorphic,
            "identical normal form: " + std::to_string(a.isolated) + " points, " +
                std::to_string(a.circles) + " circles, reduced multigraph on " +
                std::to_string(a.core.n) + " branch vertices"};
}

namespace {

// The canonical projection from the refinement: a chain maps to its
// largest element. Continuous and surjective.
SimplexMap refinement_projection(const SimplicialComplex& refined,
                                 const SimplicialComplex& base) {
    std::vector<int> img(refined.size());
    for (size_t i = 0; i < refined.size(); ++i) {
        // vertices of the refined complex are canonical indices into base;
        // a simplex is a chain there, mapped to its largest member
        int best = -1;
        for (VertexId v : refined.simplex(static_cast<int>(i)).vertices())
            if (best < 0 || base.simplex(v).card() > base.simplex(best).card()) best = v;
        img[i] = best;
    }
    return SimplexMap::from_images(refined, base, img);
}

bool verify_continuous_image(const SimplexMap& f, RecognitionEngine& engine,
                             HomeoOptions opts, int depth);

HomeoVerdict bounded_search_impl(const SimplicialComplex& g, const SimplicialComplex& h,
                                 RecognitionEngine& engine, HomeoOptions opts, int depth);

// condition (ii): every sphere preimage homeomorphic to the sphere
bool sphere_preimages_ok(const SimplexMap& f, RecognitionEngine& engine, HomeoOptions opts,
                         int depth) {
    const SimplicialComplex& dom = f.dom();
    const SimplicialComplex& cod = f.cod();
    for (size_t yi = 0; yi < cod.size(); ++yi) {
        SimplexSet s = unit_sphere(cod, static_cast<int>(yi));
        SimplexSet pre(dom);
        for (size_t xi = 0; xi < dom.size(); ++xi)
            if (s.test(f.image_index(static_cast<int>(xi)))) pre.add(static_cast<int>(xi));
        SimplicialComplex pre_c = pre.as_complex(); // closed: preimage of a closed set
        SimplicialComplex s_c = s.as_complex();
        HomeoVerdict v = bounded_search_impl(pre_c, s_c, engine, opts, depth + 1);
        if (v.result != HomeoResult::Homeomorphic) return false;
    }
    return true;
}

// condition (i): locally maximal simplices have ball preimage closures
bool ball_preimages_ok(const SimplexMap& f, RecognitionEngine& engine) {
    const SimplicialComplex& dom = f.dom();
    const SimplicialComplex& cod = f.cod();
    for (size_t yi = 0; yi < cod.size(); ++yi) {
        if (!cod.is_locally_maximal(static_cast<int>(yi))) continue;
        SimplexSet pre(dom);
        for (size_t xi = 0; xi < dom.size(); ++xi)
            if (f.image_index(static_cast<int>(xi)) == static_cast<int>(yi))
                pre.add(static_cast<int>(xi));
        SimplicialComplex ball = pre.closure_complex();
        if (engine.ball_dimension(ball) != cod.simplex(static_cast<int>(yi)).dim()) return false;
    }
    return true;
}

bool verify_continuous_image(const SimplexMap& f, RecognitionEngine& engine, HomeoOptions opts,
                             int depth) {
    if (!is_continuous(f)) return false;
    std::vector<char> covered(f.cod().size(), 0);
    for (size_t xi = 0; xi < f.dom().size(); ++xi) covered[f.image_index(static_cast<int>(xi))] = 1;
    for (char c : covered)
        if (!c) return false;
    return ball_preimages_ok(f, engine) && sphere_preimages_ok(f, engine, opts, depth);
}

// DFS over monotone surjections dom -> cod; returns a witness map if one
// passes the continuous-image conditions, nullopt when the budget dies.
struct MapSearch {
    const SimplicialComplex& dom;
    const SimplicialComplex& cod;
    RecognitionEngine& engine;
    HomeoOptions opts;
    int depth;
    std::size_t* budget;
    bool exhausted = false;

    std::optional<SimplexMap> run() {
        std::vector<int> img(dom.size(), -1);
        std::vector<int> uncovered_count{static_cast<int>(cod.size())};
        std::vector<int> cover_count(cod.size(), 0);
        std::optional<SimplexMap> found;
        std::function<bool(int)> dfs = [&](int i) -> bool {
            if (*budget == 0) {
                exhausted = true;
                return false;
            }
            --*budget;
            const int n = static_cast<int>(dom.size());
            if (i == n) {
                if (uncovered_count[0] != 0) return false;
                SimplexMap f = SimplexMap::from_images(dom, cod, img);
                if (verify_continuous_image(f, engine, opts, depth)) {
                    found = f;
                    return true;
                }
                return false;
            }
            // remaining assignments must be able to cover what is uncovered
            if (uncovered_count[0] > n - i) return false;
            // candidates: cod simplices containing the images of all faces
            // (canonical order assigns faces first, so monotonicity is a
            // superset constraint on the union of face images)
            std::vector<int> cands;
            std::optional<Simplex> need;
            for (int fidx : dom.faces_of(i)) {
                if (fidx >= i || img[fidx] < 0) continue;
                const Simplex& fy = cod.simplex(img[fidx]);
                need = need ? Simplex::unite(*need, fy) : fy;
            }
            if (need) {
                int ni = cod.index_of(*need);
                if (ni < 0) return false;
                for (int c : SimplexSet(cod, cod.star_mask(ni)).members()) cands.push_back(c);
            } else {
                for (int c = 0; c < static_cast<int>(cod.size()); ++c) cands.push_back(c);
            }
            for (int c : cands) {
                img[i] = c;
                if (cover_count[c]++ == 0) uncovered_count[0]--;
                if (dfs(i + 1)) return true;
                if (--cover_count[c] == 0) uncovered_count[0]++;
                img[i] = -1;
                if (exhausted) return false;
            }
            return false;
        };
        dfs(0);
        return found;
    }
};

// one direction of the homeomorphism: h is a continuous image of g
enum class ImageSearch { Found, NotFound, Exhausted };

ImageSearch continuous_image_search(const SimplicialComplex& g, const SimplicialComplex& h,
                                    RecognitionEngine& engine, HomeoOptions opts, int depth) {
    std::size_t budget = opts.search_budget;
    SimplicialComplex cur = g;
    for (int n = 0; n <= opts.max_refinements; ++n) {
        if (n > 0) cur = barycentric_refine(cur);
        if (cur.size() >= h.size()) {
            MapSearch search{cur, h, engine, opts, depth, &budget};
            if (auto f = search.run()) return ImageSearch::Found;
            if (search.exhausted) return ImageSearch::Exhausted;
        }
    }
    return ImageSearch::NotFound;
}

HomeoVerdict bounded_search_impl(const SimplicialComplex& g, const SimplicialComplex& h,
                                 RecognitionEngine& engine, HomeoOptions opts, int depth) {
    if (auto v = invariant_screen(g, h, engine)) return *v;
    if (g.dimension() <= 1 && h.dimension() <= 1) return one_dim_homeomorphic(g, h);
    if (is_isomorphic(g, h)) return {HomeoResult::Homeomorphic, "isomorphic complexes"};

    // common Barycentric refinements, canonical projections as witnesses;
    // towers are grown lazily, shallow matches first
    constexpr size_t kRefineCap = 3000;
    std::vector<SimplicialComplex> rg{g}, rh{h};
    auto ensure = [&](std::vector<SimplicialComplex>& tower, int d) -> const SimplicialComplex* {
        while (static_cast<int>(tower.size()) <= d) {
            if (tower.back().size() > kRefineCap) return nullptr;
            tower.push_back(barycentric_refine(tower.back()));
        }
        return &tower[d];
    };
    for (int total = 1; total <= 2 * opts.max_refinements; ++total)
        for (int i = 0; i <= std::min(total, opts.max_refinements); ++i) {
            int j = total - i;
            if (j < 0 || j > opts.max_refinements) continue;
            const SimplicialComplex* gi = ensure(rg, i);
            const SimplicialComplex* hj = ensure(rh, j);
            if (!gi || !hj) continue;
            if (gi->size() != hj->size()) continue;
            if (!(*gi == *hj) && !is_isomorphic(*gi, *hj)) continue;
            // verify the canonical projection chains on both sides
            bool ok = true;
            for (int k = 1; k <= i && ok; ++k)
                ok = verify_continuous_image(refinement_projection(rg[k], rg[k - 1]), engine,
                                             opts, depth);
            for (int k = 1; k <= j && ok; ++k)
                ok = verify_continuous_image(refinement_projection(rh[k], rh[k - 1]), engine,
                                             opts, depth);
            if (ok)
                return {HomeoResult::Homeomorphic,
                        "common Barycentric refinement (depths " + std::to_string(i) + ", " +
                            std::to_string(j) + "), canonical projections verified"};
        }

    ImageSearch fwd = continuous_image_search(g, h, engine, opts, depth);
    if (fwd == ImageSearch::Found) {
        ImageSearch bwd = continuous_image_search(h, g, engine, opts, depth);
        if (bwd == ImageSearch::Found)
            return {HomeoResult::Homeomorphic, "continuous surjections found in both directions"};
        if (bwd == ImageSearch::NotFound && opts.max_refinements == 0)
            return {HomeoResult::Inconclusive, "one-directional image only within bounds"};
    }
    return {HomeoResult::Inconclusive,
            "search bounds exhausted (max refinements " + std::to_string(opts.max_refinements) +
                ", budget " + std::to_string(opts.search_budget) + ")"};
}

} // namespace

HomeoVerdict bounded_search(const SimplicialComplex& g, const SimplicialComplex& h,
                            RecognitionEngine& engine, HomeoOptions opts) {
    return bounded_search_impl(g, h, engine, opts, 0);
}

} // namespace ft
