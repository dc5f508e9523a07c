#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ft/canonical.hpp"
#include "ft/characteristics.hpp"
#include "ft/graph.hpp"
#include "ft/recognition.hpp"
#include "ft/registry.hpp"
#include "ft/rng.hpp"
#include "ft/topology.hpp"

using namespace ft;

namespace {

SimplexSet make_set(const SimplicialComplex& g, std::initializer_list<Simplex> simps) {
    SimplexSet s(g);
    for (const auto& x : simps) s.add(g.index_of(x));
    return s;
}

} // namespace

TEST_CASE("stars and spheres in the K2 complex") {
    SimplicialComplex g = whitney_complex(Graph::complete(2));
    SimplexSet u1 = star(g, Simplex{0});
    CHECK(u1.count() == 2); // {0} and {0,1}
    CHECK(u1.test(g.index_of(Simplex{0, 1})));
    SimplexSet ue = star(g, Simplex{0, 1});
    CHECK(ue.count() == 1);

    CHECK(unit_sphere(g, Simplex{0}) == make_set(g, {Simplex{1}}));
    CHECK(unit_sphere(g, Simplex{1}) == make_set(g, {Simplex{0}}));
    CHECK(unit_sphere(g, Simplex{0, 1}) == make_set(g, {Simplex{0}, Simplex{1}}));
    CHECK_THROWS_AS(star(g, Simplex{7}), std::invalid_argument);
}

TEST_CASE("star of a facet is a singleton") {
    SimplicialComplex g = *make_named_complex("fig1");
    for (const auto& f : g.facets()) CHECK(star(g, f).count() == 1);
}

TEST_CASE("core is the closure of a single simplex") {
    SimplicialComplex g = whitney_complex(Graph::complete(3));
    CHECK(core(g, Simplex{0, 1, 2}).count() == 7);
    CHECK(core(g, Simplex{0}).count() == 1);
    SimplicialComplex k2 = whitney_complex(Graph::complete(2));
    CHECK(core(k2, Simplex{0, 1}).count() == 3);
}

TEST_CASE("unit sphere of a vertex in the octahedron is a circle") {
    SimplicialComplex g = *make_named_complex("octahedron");
    SimplexSet s = unit_sphere(g, Simplex{0});
    CHECK(s.count() == 8);
    SimplicialComplex c = s.as_complex();
    CHECK(is_isomorphic(c, *make_named_complex("cycle:4")));
}

TEST_CASE("sphere of a facet of K3 is the circle complex") {
    SimplicialComplex g = whitney_complex(Graph::complete(3));
    SimplexSet s = unit_sphere(g, Simplex{0, 1, 2});
    CHECK(s.count() == 6);
    CHECK(is_closed(g, s));
}

TEST_CASE("topology enumeration counts") {
    CHECK(enumerate_topology(whitney_complex(Graph::complete(2)), 100).count == 5);
    CHECK(enumerate_topology(whitney_complex(Graph::complete(3)), 1000).count == 19);
    // the circle complex has L(8) = 47 open sets, brute-forced below
    CHECK(enumerate_topology(whitney_complex(Graph::cycle(4)), 1000).count == 47);
    CHECK(enumerate_topology(whitney_complex(Graph::complete(4)), 1000).count == 167);
}

TEST_CASE("enumeration reports cleanly when the limit is exceeded") {
    TopologyResult t = enumerate_topology(whitney_complex(Graph::complete(4)), 50);
    CHECK_FALSE(t.complete);
    CHECK(t.count >= 50);
    CHECK_FALSE(t.topology.has_value());
}

TEST_CASE("opens are closed under union and intersection, complement closed") {
    SimplicialComplex g = whitney_complex(Graph::complete(3));
    TopologyResult t = enumerate_topology(g, 100);
    REQUIRE(t.complete);
    const auto& opens = t.topology->opens;
    CHECK(opens.size() == 19);
    for (const auto& a : opens) {
        CHECK(is_open(g, a));
        CHECK(is_closed(g, a.complement()));
        for (const auto& b : opens) {
            CHECK(is_open(g, a.unite(b)));
            CHECK(is_open(g, a.intersect(b)));
        }
    }
}

TEST_CASE("up-set predicate agrees with enumeration on small complexes") {
    SimplicialComplex g = whitney_complex(Graph::cycle(4)); // 8 simplices
    TopologyResult t = enumerate_topology(g, 1000);
    REQUIRE(t.complete);
    std::set<std::vector<std::uint64_t>> open_bits;
    for (const auto& o : t.topology->opens) open_bits.insert(o.raw());
    int count = 0;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        SimplexSet s(g);
        for (size_t i = 0; i < g.size(); ++i)
            if (m & (1u << i)) s.add(static_cast<int>(i));
        if (is_open(g, s)) {
            ++count;
            CHECK(open_bits.count(s.raw()) == 1);
        }
    }
    CHECK(count == 47);
    CHECK(static_cast<size_t>(count) == t.count);
}

TEST_CASE("star intersection law U(x) cap U(y)") {
    SimplicialComplex g = *make_named_complex("fig1");
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            SimplexSet cap = star(g, static_cast<int>(i)).intersect(star(g, static_cast<int>(j)));
            Simplex u = Simplex::unite(g.simplex(static_cast<int>(i)), g.simplex(static_cast<int>(j)));
            int uidx = g.index_of(u);
            if (uidx >= 0)
                CHECK(cap == star(g, uidx));
            else
                CHECK(cap.empty());
        }
}

TEST_CASE("locally closed counts for K3 and single simplices") {
    SimplicialComplex g = whitney_complex(Graph::complete(3));
    // oracle: the literal definition, every intersection of an open and a
    // closed set
    TopologyResult t = enumerate_topology(g, 100);
    REQUIRE(t.complete);
    std::set<std::vector<std::uint64_t>> by_definition;
    for (const auto& u : t.topology->opens)
        for (const auto& o : t.topology->opens)
            by_definition.insert(u.intersect(o.complement()).raw());
    int locally_closed = 0;
    for (std::uint32_t m = 0; m < 128; ++m) {
        SimplexSet s(g);
        for (int i = 0; i < 7; ++i)
            if (m & (1u << i)) s.add(i);
        bool lc = is_locally_closed(g, s);
        CHECK(lc == (by_definition.count(s.raw()) == 1));
        if (lc) ++locally_closed;
    }
    CHECK(locally_closed == 82);

    // a single non-maximal, non-vertex simplex: not open, not closed, locally closed
    SimplexSet edge = make_set(g, {Simplex{0, 1}});
    CHECK_FALSE(is_open(g, edge));
    CHECK_FALSE(is_closed(g, edge));
    CHECK(is_locally_closed(g, edge));

    // the chain {1},{1,2},{1,2,3} is not locally closed
    SimplexSet chain = make_set(g, {Simplex{0}, Simplex{0, 1}, Simplex{0, 1, 2}});
    CHECK_FALSE(is_locally_closed(g, chain));
}

TEST_CASE("boundary operator") {
    SimplicialComplex g = whitney_complex(Graph::complete(3));
    for (size_t i = 0; i < g.size(); ++i)
        CHECK(boundary(g, star(g, static_cast<int>(i))) == unit_sphere(g, static_cast<int>(i)));
    CHECK(boundary(g, SimplexSet::full(g)).empty());
    SimplexSet facet = make_set(g, {Simplex{0, 1, 2}});
    CHECK(boundary(g, facet).count() == 6);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(*make_named_complex("cycle:4")));
    CHECK(connected_components(zero_sphere()).size() == 2);
    SimplicialComplex cc = whitney_complex(Graph::cycle(4).complement());
    CHECK(connected_components(cc).size() == 2); // two disjoint K2
    CHECK(is_connected(SimplicialComplex()));
}

TEST_CASE("separation axioms") {
    SeparationReport r = separation_report(whitney_complex(Graph::complete(2)));
    CHECK(r.t0);
    CHECK_FALSE(r.t1);
    CHECK_FALSE(r.t2);
    SeparationReport z = separation_report(whitney_complex(Graph::edgeless(3)));
    CHECK(z.t0);
    CHECK(z.t1);
    CHECK(z.t2);
    SeparationReport e = separation_report(SimplicialComplex());
    CHECK(e.t0);
    CHECK(e.t1);
    CHECK(e.t2);
}

TEST_CASE("topological dimension equals maximal dimension on clique complexes") {
    CHECK(topological_dimension(whitney_complex(Graph::complete(4))) == 3);
    CHECK(topological_dimension(*make_named_complex("cycle:5")) == 1);
    CHECK(topological_dimension(*make_named_complex("octahedron")) == 2);
    CHECK_THROWS_AS(topological_dimension(SimplicialComplex()), std::invalid_argument);
}

TEST_CASE("Cech nerve of the vertex-star cover recovers the graph") {
    for (const char* key : {"cycle:5", "fig1", "moebius", "wheel:4"}) {
        Graph g0 = *make_named_graph(key);
        SimplicialComplex g = *make_named_complex(key);
        std::vector<SimplexSet> cover;
        for (VertexId v : g.vertex_list()) cover.push_back(star(g, Simplex{v}));
        Graph nerve = cech_nerve_graph(g, cover);
        CHECK(graphs_isomorphic(nerve, g0));
    }
    // single-set cover: one isolated vertex
    SimplicialComplex k2 = whitney_complex(Graph::complete(2));
    Graph n1 = cech_nerve_graph(k2, {SimplexSet::full(k2)});
    CHECK(n1.vertex_count() == 1);
    CHECK(n1.edge_count() == 0);
    CHECK_THROWS_AS(cech_nerve_graph(k2, {star(k2, Simplex{0})}), std::invalid_argument);
}

TEST_CASE("Cech nerve of the full star basis records unions that are simplices") {
    SimplicialComplex g = whitney_complex(Graph::complete(2));
    Graph nerve = cech_nerve_graph(g, star_basis(g));
    // stars of x and y intersect exactly when x union y is a simplex
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            bool expect = g.contains(
                Simplex::unite(g.simplex(static_cast<int>(i)), g.simplex(static_cast<int>(j))));
            CHECK(nerve.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) == expect);
        }
}

TEST_CASE("Lucas law: the circle complex C_n has L(2n) open sets") {
    std::vector<std::int64_t> lucas{2, 1};
    for (int i = 2; i <= 14; ++i) lucas.push_back(lucas[i - 1] + lucas[i - 2]);
    for (int n = 4; n <= 7; ++n) {
        TopologyResult t = enumerate_topology(whitney_complex(Graph::cycle(n)), 3000, false);
        REQUIRE(t.complete);
        CHECK(t.count == static_cast<size_t>(lucas[2 * n]));
    }
}

TEST_CASE("unit balls are closed and contractible") {
    RecognitionEngine engine;
    for (const char* key : {"cycle:5", "fig1", "octahedron", "digital8"}) {
        SimplicialComplex g = *make_named_complex(key);
        for (size_t i = 0; i < g.size(); ++i) {
            SimplexSet b = unit_ball(g, static_cast<int>(i));
            CHECK(is_closed(g, b));
            CHECK(is_closed(g, unit_sphere(g, static_cast<int>(i))));
            CHECK(engine.is_contractible(b.as_complex()));
        }
    }
}

TEST_CASE("fig1 has 17 simplices and 3032 open sets") {
    SimplicialComplex g = *make_named_complex("fig1");
    CHECK(g.size() == 17);
    TopologyResult t = enumerate_topology(g, 5000, false);
    REQUIRE(t.complete);
    CHECK(t.count == 3032);
}
