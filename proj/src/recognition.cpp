#include "ft/recognition.hpp"

#include <algorithm>

#include "ft/canonical.hpp"
#include "ft/characteristics.hpp"
#include "ft/hodge.hpp"
#include "ft/topology.hpp"

namespace ft {

SimplicialComplex RecognitionEngine::sphere_complex(const SimplicialComplex& g, int idx) const {
    return unit_sphere(g, idx).as_complex();
}

SimplicialComplex RecognitionEngine::minus_star(const SimplicialComplex& g, int idx) const {
    return SimplexSet::full(g).minus(star(g, idx)).as_complex();
}

RecognitionEngine::Tri RecognitionEngine::contractible_rec(const SimplicialComplex& g,
                                                           std::size_t& budget) {
    if (g.size() == 0) return Tri::False;
    if (g.size() == 1) return Tri::True;
    if (g.euler_characteristic() != 1) return Tri::False; // certified: collapses preserve chi = 1

    const bool use_memo = g.size() <= opts_.memo_size_cap;
    std::string key;
    if (use_memo) {
        key = canonical_key(g);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = contractible_memo_.find(key);
        if (it != contractible_memo_.end()) return it->second ? Tri::True : Tri::False;
    }

    const int n = static_cast<int>(g.size());
    std::vector<int> cand(n);
    for (int i = 0; i < n; ++i) cand[i] = i;
    auto degree = [&](int i) {
        return SimplexSet(g, g.closure_mask(i)).count() + SimplexSet(g, g.star_mask(i)).count();
    };
    std::vector<std::size_t> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = degree(i);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        return a < b;
    });

    bool exhausted = false;
    for (int x : cand) {
        if (budget == 0) {
            exhausted = true;
            break;
        }
        --budget;
        Tri ts = contractible_rec(sphere_complex(g, x), budget);
        if (ts == Tri::Exhausted) {
            exhausted = true;
            continue;
        }
        if (ts == Tri::False) continue;
        Tri tr = contractible_rec(minus_star(g, x), budget);
        if (tr == Tri::True) {
            if (use_memo) {
                std::lock_guard<std::mutex> lk(mu_);
                contractible_memo_[key] = true;
            }
            return Tri::True;
        }
        if (tr == Tri::Exhausted) exhausted = true;
    }
    if (exhausted) return Tri::Exhausted;
    if (use_memo) {
        std::lock_guard<std::mutex> lk(mu_);
        contractible_memo_[key] = false;
    }
    return Tri::False;
}

bool RecognitionEngine::is_contractible(const SimplicialComplex& g) {
    std::size_t budget = opts_.contractible_budget;
    Tri t = contractible_rec(g, budget);
    last_exhausted_ = (t == Tri::Exhausted);
    if (t == Tri::Exhausted)
        throw BudgetExceeded("is_contractible: search budget exhausted without a verdict");
    return t == Tri::True;
}

std::optional<int> RecognitionEngine::sphere_rec(const SimplicialComplex& g, bool& exhausted) {
    if (g.is_empty()) return -1;
    std::string key = canonical_key(g);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = sphere_memo_.find(key);
        if (it != sphere_memo_.end()) return it->second;
    }
    auto remember = [&](std::optional<int> v) {
        std::lock_guard<std::mutex> lk(mu_);
        sphere_memo_[key] = v;
        return v;
    };

    const int d = g.dimension();
    // Euler gem: a d-sphere has chi = 1 + (-1)^d
    if (g.euler_characteristic() != 1 + (d % 2 ? -1 : 1)) return remember(std::nullopt);
    if (manifold_rec(g, exhausted) != d) return remember(std::nullopt);
    // cohomology screen (certified): sphere Betti pattern
    {
        std::vector<int> b = betti(g);
        std::vector<int> want(d + 1, 0);
        if (d == 0) {
            want[0] = 2;
        } else {
            want[0] = 1;
            want[d] = 1;
        }
        if (b != want) return remember(std::nullopt);
    }
    // definition: some puncture g \ U(x) is contractible
    std::size_t budget = opts_.puncture_budget;
    bool local_exhausted = false;
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
        Tri t = contractible_rec(minus_star(g, x), budget);
        if (t == Tri::True) return remember(d);
        if (t == Tri::Exhausted) {
            local_exhausted = true;
            break; // the pool is gone; further punctures cannot fare better
        }
    }
    if (local_exhausted) {
        exhausted = true;
        // not recognized as a sphere; not memoized as certified knowledge,
        // but cached to keep repeated queries from re-burning the budget
        return remember(std::nullopt);
    }
    return remember(std::nullopt);
}

std::optional<int> RecognitionEngine::manifold_rec(const SimplicialComplex& g, bool& exhausted) {
    if (g.is_empty()) return -1;
    std::string key = canonical_key(g);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = manifold_memo_.find(key);
        if (it != manifold_memo_.end()) return it->second;
    }
    auto remember = [&](std::optional<int> v) {
        std::lock_guard<std::mutex> lk(mu_);
        manifold_memo_[key] = v;
        return v;
    };
    const int d = g.dimension();
    const int n = static_cast<int>(g.size());
    // cheapest unit spheres first, so failures surface before the big links
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> ssize(n);
    for (int i = 0; i < n; ++i) ssize[i] = unit_ball(g, i).count();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ssize[a] != ssize[b]) return ssize[a] < ssize[b];
        return a < b;
    });
    for (int x : order) {
        if (sphere_rec(sphere_complex(g, x), exhausted) != d - 1) return remember(std::nullopt);
    }
    return remember(d);
}

std::optional<int> RecognitionEngine::sphere_dimension(const SimplicialComplex& g) {
    bool exhausted = false;
    auto v = sphere_rec(g, exhausted);
    last_exhausted_ = exhausted;
    return v;
}

std::optional<int> RecognitionEngine::manifold_dimension(const SimplicialComplex& g) {
    bool exhausted = false;
    auto v = manifold_rec(g, exhausted);
    last_exhausted_ = exhausted;
    return v;
}

std::optional<RecognitionEngine::BoundaryInfo> RecognitionEngine::manifold_with_boundary(
    const SimplicialComplex& g) {
    if (g.is_empty()) return std::nullopt;
    const int d = g.dimension();
    bool exhausted = false;
    std::vector<Simplex> boundary;
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
        SimplicialComplex s = sphere_complex(g, x);
        if (sphere_rec(s, exhausted) == d - 1) continue;
        if (ball_dimension(s) == d - 1) {
            boundary.push_back(g.simplex(x));
            continue;
        }
        last_exhausted_ = exhausted;
        return std::nullopt;
    }
    last_exhausted_ = exhausted;
    BoundaryInfo info;
    info.dim = d;
    std::vector<std::vector<VertexId>> sets;
    for (const auto& s : boundary) sets.push_back(s.vertices());
    info.boundary = SimplicialComplex::closure(sets);
    return info;
}

std::optional<int> RecognitionEngine::ball_dimension(const SimplicialComplex& g) {
    if (g.is_empty()) return std::nullopt;
    std::string key = canonical_key(g);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ball_memo_.find(key);
        if (it != ball_memo_.end()) return it->second;
    }
    auto remember = [&](std::optional<int> v) {
        std::lock_guard<std::mutex> lk(mu_);
        ball_memo_[key] = v;
        return v;
    };
    auto mwb = manifold_with_boundary(g);
    if (!mwb) return remember(std::nullopt);
    std::size_t budget = opts_.contractible_budget;
    if (contractible_rec(g, budget) != Tri::True) return remember(std::nullopt);
    bool exhausted = false;
    if (sphere_rec(mwb->boundary, exhausted) != mwb->dim - 1) return remember(std::nullopt);
    return remember(mwb->dim);
}

bool RecognitionEngine::is_dehn_sommerville(const SimplicialComplex& g, int d) {
    if (d < -1) return false;
    if (d == -1) return g.is_empty();
    if (g.is_empty()) return false;
    std::string key = canonical_key(g) + "#" + std::to_string(d);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ds_memo_.find(key);
        if (it != ds_memo_.end()) return it->second;
    }
    bool ok = g.euler_characteristic() == 1 + (d % 2 ? -1 : 1);
    for (int x = 0; ok && x < static_cast<int>(g.size()); ++x)
        ok = is_dehn_sommerville(sphere_complex(g, x), d - 1);
    std::lock_guard<std::mutex> lk(mu_);
    ds_memo_[key] = ok;
    return ok;
}

// ---- graph-level Morse machinery ----

namespace {

void check_locally_injective(const Graph& g, const std::map<VertexId, double>& f) {
    for (VertexId v : g.vertices())
        if (!f.count(v)) throw std::invalid_argument("function not total on vertices");
    for (auto [a, b] : g.edges())
        if (f.at(a) == f.at(b)) throw std::invalid_argument("function not locally injective");
}

Graph lower_sphere(const Graph& g, const std::map<VertexId, double>& f, VertexId v) {
    std::vector<VertexId> lower;
    for (VertexId w : g.neighbors(v))
        if (f.at(w) < f.at(v)) lower.push_back(w);
    return g.induced(lower);
}

} // namespace

int poincare_hopf_index(const Graph& g, const std::map<VertexId, double>& f, VertexId v) {
    check_locally_injective(g, f);
    SimplicialComplex s = whitney_complex(lower_sphere(g, f, v));
    return 1 - static_cast<int>(s.euler_characteristic());
}

MorseData morse_classify(const Graph& g, const std::map<VertexId, double>& f,
                         RecognitionEngine& engine) {
    check_locally_injective(g, f);
    MorseData data;
    data.f = f;
    for (VertexId v : g.vertices()) {
        SimplicialComplex s = whitney_complex(lower_sphere(g, f, v));
        data.ph_index[v] = 1 - static_cast<int>(s.euler_characteristic());
        if (auto sd = engine.sphere_dimension(s)) {
            data.type[v] = MorsePointType::Critical;
            data.morse_index[v] = *sd + 1;
            continue;
        }
        bool contractible = false;
        try {
            contractible = engine.is_contractible(s);
        } catch (const BudgetExceeded&) {
            contractible = false;
        }
        data.type[v] = contractible ? MorsePointType::Regular : MorsePointType::Irregular;
    }
    return data;
}

Graph level_set(const Graph& g, const std::map<VertexId, double>& f, double c) {
    for (VertexId v : g.vertices()) {
        if (!f.count(v)) throw std::invalid_argument("level_set: function not total");
        if (f.at(v) == c) throw std::invalid_argument("level_set: c collides with a vertex value");
    }
    SimplicialComplex w = whitney_complex(g);
    std::vector<int> crossing;
    for (size_t i = 0; i < w.size(); ++i) {
        const Simplex& s = w.simplex(static_cast<int>(i));
        bool below = false, above = false;
        for (VertexId v : s.vertices()) (f.at(v) < c ? below : above) = true;
        if (below && above) crossing.push_back(static_cast<int>(i));
    }
    std::vector<VertexId> vs(crossing.size());
    for (size_t i = 0; i < crossing.size(); ++i) vs[i] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (size_t i = 0; i < crossing.size(); ++i)
        for (size_t j = i + 1; j < crossing.size(); ++j) {
            const Simplex& a = w.simplex(crossing[i]);
            const Simplex& b = w.simplex(crossing[j]);
            if (a.proper_subset_of(b) || b.proper_subset_of(a))
                es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        }
    return Graph(vs, es);
}

} // namespace ft
