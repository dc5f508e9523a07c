#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ft/characteristics.hpp"
#include "ft/graph.hpp"
#include "ft/hodge.hpp"
#include "ft/registry.hpp"
#include "ft/rng.hpp"

using namespace ft;

TEST_CASE("exterior derivative of K2 and d*d = 0") {
    SimplicialComplex k2 = whitney_complex(Graph::complete(2));
    IntMatrix d = exterior_derivative(k2);
    // edge row: dropping the position-i vertex carries sign (-1)^i, so the
    // face {0} (vertex 1 dropped) gets -1 and the face {1} gets +1
    int e = k2.index_of(Simplex{0, 1});
    CHECK(d.at(e, k2.index_of(Simplex{0})) == -1);
    CHECK(d.at(e, k2.index_of(Simplex{1})) == 1);
    CHECK(d.mul(d).is_zero());

    for (const char* key : {"complete:4", "cycle:4", "octahedron", "fig1"}) {
        IntMatrix dd = exterior_derivative(*make_named_complex(key));
        CHECK(dd.mul(dd).is_zero());
    }
}

TEST_CASE("rank of d on the circle") {
    SimplicialComplex c4 = *make_named_complex("cycle:4");
    IntMatrix d = exterior_derivative(c4);
    CHECK(rank_exact(d) == 3);
}

TEST_CASE("hodge blocks match the f-vector and the assembled Laplacian") {
    SimplicialComplex octa = *make_named_complex("octahedron");
    std::vector<IntMatrix> blocks = hodge_blocks(octa);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].rows == 6);
    CHECK(blocks[1].rows == 12);
    CHECK(blocks[2].rows == 8);

    // assemble L = (d + d^T)^2 and compare the diagonal blocks
    IntMatrix d = exterior_derivative(octa);
    IntMatrix dsym = d.add(d.transpose());
    IntMatrix l = dsym.mul(dsym);
    int off = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) CHECK(b.at(r, c) == l.at(off + r, off + c));
        off += b.rows;
    }

    SimplicialComplex pt = SimplicialComplex::closure({{0}});
    auto pb = hodge_blocks(pt);
    REQUIRE(pb.size() == 1);
    CHECK(pb[0].at(0, 0) == 0);
}

TEST_CASE("hodge blocks are positive semidefinite on random vectors") {
    SimplicialComplex g = *make_named_complex("fig1");
    std::vector<IntMatrix> blocks = hodge_blocks(g);
    SplitMix64 rng(12);
    for (const auto& b : blocks)
        for (int t = 0; t < 20; ++t) {
            std::vector<long long> x(b.rows);
            for (auto& v : x) v = static_cast<long long>(rng.below(11)) - 5;
            long long quad = 0;
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c) quad += x[r] * b.at(r, c) * x[c];
            CHECK(quad >= 0);
        }
}

TEST_CASE("betti numbers of the staple complexes") {
    CHECK(betti(*make_named_complex("cycle:4")) == std::vector<int>{1, 1});
    CHECK(betti(*make_named_complex("octahedron")) == std::vector<int>{1, 0, 1});
    CHECK(betti(*make_named_complex("figure8")) == std::vector<int>{1, 2});
    CHECK(betti(whitney_complex(Graph::complete(4))) == std::vector<int>{1, 0, 0, 0});
    CHECK(betti(*make_named_complex("moebius")) == std::vector<int>{1, 1, 0});
    CHECK(betti(*make_named_complex("cylinder")) == std::vector<int>{1, 1, 0});
    CHECK(betti(*make_named_complex("threesphere")) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("homology 3-sphere has sphere cohomology") {
    CHECK(betti(*make_named_complex("homology3sphere")) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("betti invariant under Barycentric refinement") {
    for (const char* key : {"cycle:4", "complete:3", "figure8", "digital8", "moebius", "cylinder",
                            "fig1", "octahedron"}) {
        SimplicialComplex g = *make_named_complex(key);
        CHECK(betti(g) == betti(barycentric_refine(g)));
    }
}

TEST_CASE("euler-poincare and mckean-singer") {
    for (const char* key : {"cycle:4", "octahedron", "figure8", "moebius", "fig1"}) {
        SimplicialComplex g = *make_named_complex(key);
        CHECK(euler_poincare_check(g));
        for (double t : {0.1, 1.0, 10.0}) CHECK(mckean_singer_check(g, t));
    }
    CHECK(euler_poincare_check(SimplicialComplex()));
    CHECK_THROWS_AS(mckean_singer_check(*make_named_complex("cycle:4"), 0.0),
                    std::invalid_argument);
}

TEST_CASE("wu-betti tuples from the sources") {
    CHECK(wu_betti(*make_named_complex("onesphere")) == std::vector<int>{0, 1, 1});
    CHECK(wu_betti(*make_named_complex("twosphere")) == std::vector<int>{0, 0, 1, 0, 1});
    CHECK(wu_betti(*make_named_complex("moebius")) == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(wu_betti(*make_named_complex("cylinder")) == std::vector<int>{0, 0, 1, 1, 0});
}

TEST_CASE("wu-betti by the literal dense construction on C4") {
    SimplicialComplex g = *make_named_complex("cycle:4");
    const int n = static_cast<int>(g.size());
    struct P {
        int x, y;
    };
    std::vector<P> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Simplex::intersect(g.simplex(i), g.simplex(j))) pairs.push_back({i, j});
    auto level = [&](const P& p) { return g.simplex(p.x).card() + g.simplex(p.y).card(); };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const P& a, const P& b) { return level(a) < level(b); });
    const int n2 = static_cast<int>(pairs.size());
    auto find_pair = [&](int x, int y) {
        for (int k = 0; k < n2; ++k)
            if (pairs[k].x == x && pairs[k].y == y) return k;
        return -1;
    };
    IntMatrix dd(n2, n2);
    for (int m = 0; m < n2; ++m) {
        const Simplex& x = g.simplex(pairs[m].x);
        const Simplex& y = g.simplex(pairs[m].y);
        if (x.card() > 1)
            for (int k = 1; k <= x.card(); ++k) {
                int r = find_pair(g.index_of(x.erase_at(k - 1)), pairs[m].y);
                if (r >= 0) dd.at(m, r) += (k % 2 ? -1 : 1);
            }
        if (y.card() > 1)
            for (int k = 1; k <= y.card(); ++k) {
                int r = find_pair(pairs[m].x, g.index_of(y.erase_at(k - 1)));
                if (r >= 0) dd.at(m, r) += ((x.card() + k) % 2 ? -1 : 1);
            }
    }
    IntMatrix d2 = dd.add(dd.transpose());
    IntMatrix l2 = d2.mul(d2);
    // slice diagonal blocks by level and take nullities
    std::vector<int> out;
    int pos = 0;
    while (pos < n2) {
        int end = pos;
        while (end < n2 && level(pairs[end]) == level(pairs[pos])) ++end;
        IntMatrix block(end - pos, end - pos);
        for (int r = pos; r < end; ++r)
            for (int c = pos; c < end; ++c) block.at(r - pos, c - pos) = l2.at(r, c);
        out.push_back(nullity_exact(block));
        pos = end;
    }
    CHECK(out == wu_betti(g));
    CHECK(out == std::vector<int>{0, 1, 1});
}

TEST_CASE("wu-betti alternating sum gives the Wu characteristic") {
    for (const char* key : {"onesphere", "twosphere", "moebius", "cylinder", "digital8"}) {
        SimplicialComplex g = *make_named_complex(key);
        std::vector<int> wb = wu_betti(g);
        std::int64_t alt = 0;
        for (size_t k = 0; k < wb.size(); ++k) alt += (k % 2 ? -1 : 1) * wb[k];
        CHECK(alt == wu(g, 2));
    }
}

TEST_CASE("simplex map constructors and continuity") {
    SimplicialComplex c8 = whitney_complex(Graph::cycle(8));
    SimplicialComplex c4 = whitney_complex(Graph::cycle(4));
    std::map<VertexId, VertexId> mod4;
    for (int v = 0; v < 8; ++v) mod4[v] = v % 4;
    SimplexMap f = SimplexMap::from_vertex_map(c8, c4, mod4);
    CHECK(is_continuous(f));
    CHECK(is_simplicial(f));

    // constant map to an edge: continuous but not simplicial
    SimplicialComplex k3 = whitney_complex(Graph::complete(3));
    SimplexMap c = SimplexMap::constant(k3, k3, Simplex{0, 1});
    CHECK(is_continuous(c));
    CHECK_FALSE(is_simplicial(c));

    // constant map to a vertex: continuous and simplicial
    SimplexMap cv = SimplexMap::constant(k3, k3, Simplex{0});
    CHECK(is_continuous(cv));
    CHECK(is_simplicial(cv));

    // swapping {0} and {0,1} inside K2 is not continuous
    SimplicialComplex k2 = whitney_complex(Graph::complete(2));
    std::vector<int> img(k2.size());
    for (size_t i = 0; i < k2.size(); ++i) img[i] = static_cast<int>(i);
    std::swap(img[k2.index_of(Simplex{0})], img[k2.index_of(Simplex{0, 1})]);
    SimplexMap swap = SimplexMap::from_images(k2, k2, img);
    CHECK_FALSE(is_continuous(swap));
}

TEST_CASE("koopman matrices and supertraces") {
    SimplicialComplex c4 = whitney_complex(Graph::cycle(4));
    SimplexMap id = SimplexMap::identity(c4);
    IntMatrix u = koopman(id);
    CHECK(u == IntMatrix::identity(static_cast<int>(c4.size())));
    CHECK(fixed_point_index_sum(id) == c4.euler_characteristic());

    // rotation: no fixed simplices at all
    std::map<VertexId, VertexId> rot{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    SimplexMap r = SimplexMap::from_vertex_map(c4, c4, rot);
    IntMatrix ur = koopman(r);
    for (size_t i = 0; i < c4.size(); ++i) CHECK(ur.at(static_cast<int>(i), static_cast<int>(i)) == 0);
    CHECK(fixed_point_index_sum(r) == 0);
    CHECK(lefschetz_number(r) == 0);
    CHECK(lefschetz_check(r));

    // reflection fixing two vertices: Lefschetz number 2
    std::map<VertexId, VertexId> refl{{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    SimplexMap m = SimplexMap::from_vertex_map(c4, c4, refl);
    CHECK(fixed_point_index_sum(m) == 2);
    CHECK(lefschetz_number(m) == 2);

    // reflection across an edge axis: two fixed edges, each with a vertex
    // swap, index omega * sign = (-1)(-1) = +1 each
    std::map<VertexId, VertexId> eref{{0, 1}, {1, 0}, {2, 3}, {3, 2}};
    SimplexMap em = SimplexMap::from_vertex_map(c4, c4, eref);
    CHECK(fixed_point_index_sum(em) == 2);
    CHECK(lefschetz_check(em));
}

TEST_CASE("identity lefschetz equals chi everywhere") {
    for (const char* key : {"cycle:4", "complete:3", "figure8", "octahedron", "moebius"}) {
        SimplicialComplex g = *make_named_complex(key);
        SimplexMap id = SimplexMap::identity(g);
        CHECK(lefschetz_number(id) == g.euler_characteristic());
        CHECK(lefschetz_check(id));
    }
}

TEST_CASE("lefschetz over all graph endomorphisms of C4, K3 and the octahedron") {
    Graph octa(std::vector<VertexId>{0, 1, 2, 3, 4, 5},
               {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                {1, 2}, {1, 3}, {1, 4}, {1, 5},
                {2, 4}, {4, 3}, {3, 5}, {5, 2}});
    for (int which = 0; which < 3; ++which) {
        Graph base = which == 0 ? Graph::cycle(4) : which == 1 ? Graph::complete(3) : octa;
        SimplicialComplex g = whitney_complex(base);
        const int n = static_cast<int>(base.vertex_count());
        int count = 0;
        std::vector<int> assign(n, 0);
        for (;;) {
            std::map<VertexId, VertexId> f;
            for (int v = 0; v < n; ++v) f[v] = assign[v];
            bool hom = true;
            for (auto [a, b] : base.edges())
                if (!base.has_edge(f[a], f[b])) hom = false;
            if (hom) {
                SimplexMap sm = SimplexMap::from_vertex_map(g, g, f);
                CHECK(lefschetz_check(sm));
                ++count;
            }
            int i = 0;
            while (i < n && ++assign[i] == n) assign[i++] = 0;
            if (i == n) break;
        }
        CHECK(count > 0);
    }
}
