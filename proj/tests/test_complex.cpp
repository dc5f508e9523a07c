#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ft/canonical.hpp"
#include "ft/complex.hpp"
#include "ft/graph.hpp"
#include "ft/registry.hpp"
#include "ft/rng.hpp"

using namespace ft;

TEST_CASE("closure of a triangle gives all seven faces") {
    SimplicialComplex g = SimplicialComplex::closure({{1, 2, 3}});
    CHECK(g.size() == 7);
    CHECK(g.dimension() == 2);
    CHECK(g.contains(Simplex{1, 2}));
    CHECK(g.contains(Simplex{3}));
}

TEST_CASE("closure rejects the empty set and accepts the empty input") {
    CHECK_THROWS_AS(SimplicialComplex::closure({{}}), std::invalid_argument);
    SimplicialComplex empty = SimplicialComplex::closure({});
    CHECK(empty.is_empty());
    CHECK(empty.dimension() == -1);
    CHECK(empty.f_vector().empty());
}

TEST_CASE("closure is idempotent and monotone") {
    std::vector<std::vector<VertexId>> sets{{1, 2, 3}, {3, 4}, {5}};
    SimplicialComplex g = SimplicialComplex::closure(sets);
    std::vector<std::vector<VertexId>> again;
    for (const auto& s : g.simplices()) again.push_back(s.vertices());
    CHECK(SimplicialComplex::closure(again) == g);
    // monotone: adding a generator can only grow the closure
    sets.push_back({4, 6});
    SimplicialComplex bigger = SimplicialComplex::closure(sets);
    CHECK(bigger.size() > g.size());
    for (const auto& s : g.simplices()) CHECK(bigger.contains(s));
}

TEST_CASE("homology 3-sphere facets close to 392 simplices") {
    CHECK(homology_sphere_facets().size() == 90);
    SimplicialComplex g = *make_named_complex("homology3sphere");
    CHECK(g.size() == 392);
    CHECK(g.dimension() == 3);
    FVector f = g.f_vector();
    CHECK(f == FVector{16, 106, 180, 90});
}

TEST_CASE("f-vectors of the paper's staple complexes") {
    CHECK(whitney_complex(Graph::complete(3)).f_vector() == FVector{3, 3, 1});
    SimplicialComplex octa = *make_named_complex("octahedron");
    CHECK(octa.f_vector() == FVector{6, 12, 8});
    CHECK(octa.size() == 26);
}

TEST_CASE("dimension of standard complexes") {
    CHECK(whitney_complex(Graph::complete(4)).dimension() == 3);
    CHECK(make_named_complex("homology3sphere")->dimension() == 3);
}

TEST_CASE("join sizes and identities") {
    SimplicialComplex s0 = zero_sphere();
    SimplicialComplex c4 = join(s0, s0);
    CHECK(c4.size() == 8); // S0 + S0 = C4
    CHECK(is_isomorphic(c4, *make_named_complex("cycle:4")));

    SimplicialComplex octa = join(s0, c4);
    CHECK(octa.size() == 26);
    CHECK(is_isomorphic(octa, *make_named_complex("octahedron")));

    SimplicialComplex empty;
    CHECK(join(empty, c4) == c4);
    CHECK(join(c4, empty) == c4);
}

TEST_CASE("join size formula |G|+|H|+|G||H| and f-vector convolution") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = random_graph(5, 6, rng.next());
        Graph b = random_graph(4, 4, rng.next());
        SimplicialComplex ga = whitney_complex(a), gb = whitney_complex(b);
        SimplicialComplex j = join(ga, gb);
        CHECK(j.size() == ga.size() + gb.size() + ga.size() * gb.size());
        // f_k(G+H) = f_k(G) + f_k(H) + sum_{i+j=k-1} f_i(G) f_j(H)
        FVector fa = ga.f_vector(), fb = gb.f_vector(), fj = j.f_vector();
        for (size_t k = 0; k < fj.size(); ++k) {
            std::int64_t want = 0;
            if (k < fa.size()) want += fa[k];
            if (k < fb.size()) want += fb[k];
            for (size_t i = 0; i < fa.size(); ++i) {
                size_t need = k;
                if (i + 1 > need) continue;
                size_t jj = need - 1 - i;
                if (jj < fb.size()) want += fa[i] * fb[jj];
            }
            CHECK(fj[k] == want);
        }
    }
}

TEST_CASE("join is associative up to isomorphism") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        SimplicialComplex a = whitney_complex(random_graph(4, 3, rng.next()));
        SimplicialComplex b = whitney_complex(random_graph(3, 2, rng.next()));
        SimplicialComplex c = whitney_complex(random_graph(3, 3, rng.next()));
        CHECK(is_isomorphic(join(join(a, b), c), join(a, join(b, c))));
    }
}

TEST_CASE("suspension and double suspension") {
    SimplicialComplex c4 = *make_named_complex("cycle:4");
    CHECK(is_isomorphic(suspension(c4), *make_named_complex("octahedron")));
    SimplicialComplex s3 = double_suspension(c4);
    CHECK(s3.size() == 80);
    CHECK(s3.euler_characteristic() == 0);
    SimplicialComplex empty;
    CHECK(is_isomorphic(suspension(empty), zero_sphere()));
}

TEST_CASE("wedge sums") {
    SimplicialComplex c4 = *make_named_complex("cycle:4");
    SimplicialComplex f8 = wedge_sum(c4, 0, c4, 0);
    CHECK(f8.size() == 15);
    CHECK(is_isomorphic(f8, *make_named_complex("figure8")));

    // wedge of two paths at an endpoint is again a path
    SimplicialComplex p2 = whitney_complex(Graph::path(2));
    SimplicialComplex pw = wedge_sum(p2, 1, p2, 0);
    CHECK(is_isomorphic(pw, whitney_complex(Graph::path(3))));

    // wedge with a single point changes nothing up to relabeling
    SimplicialComplex pt = SimplicialComplex::closure({{0}});
    CHECK(is_isomorphic(wedge_sum(c4, 0, pt, 0), c4));

    CHECK_THROWS_AS(wedge_sum(c4, 99, c4, 0), std::invalid_argument);
}

TEST_CASE("skeleton") {
    SimplicialComplex k3 = whitney_complex(Graph::complete(3));
    CHECK(skeleton(k3, 1).size() == 6);
    CHECK(skeleton(k3, k3.dimension()) == k3);
    SimplicialComplex k4 = whitney_complex(Graph::complete(4));
    SimplicialComplex s2 = skeleton(k4, 2);
    CHECK(s2.size() == 14);
    CHECK(skeleton(k4, -1).is_empty());
}

TEST_CASE("downward closure validated by every constructor") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex g = whitney_complex(random_graph(6, 8, rng.next()));
        for (const auto& s : g.simplices())
            for (int p = 0; p < s.card(); ++p)
                if (s.card() > 1) CHECK(g.contains(s.erase_at(p)));
    }
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({Simplex{1, 2}}), std::invalid_argument);
}

TEST_CASE("facets and local maximality") {
    SimplicialComplex g = *make_named_complex("fig1");
    CHECK(g.size() == 17);
    auto fs = g.facets();
    // the triangle 1-2-3 plus the five edges not inside it
    CHECK(fs.size() == 6);
}
