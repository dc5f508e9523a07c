#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ft/graph.hpp"
#include "ft/homeo.hpp"
#include "ft/registry.hpp"

using namespace ft;

namespace {

SimplicialComplex named(const char* key) { return *make_named_complex(key); }

} // namespace

TEST_CASE("invariant screen catches the staple mismatches") {
    RecognitionEngine engine;
    auto v1 = invariant_screen(named("cycle:5"), whitney_complex(Graph::path(4)), engine);
    REQUIRE(v1.has_value());
    CHECK(v1->result == HomeoResult::NotHomeomorphic);
    CHECK(v1->certificate.find("Euler") != std::string::npos);

    auto v2 = invariant_screen(named("figure8"), named("digital8"), engine);
    REQUIRE(v2.has_value());
    CHECK(v2->result == HomeoResult::NotHomeomorphic);
    CHECK(v2->certificate.find("Wu") != std::string::npos);

    auto same = invariant_screen(named("cycle:4"), named("cycle:4"), engine);
    CHECK_FALSE(same.has_value());

    // C5 and C6 agree on every screened invariant
    CHECK_FALSE(invariant_screen(named("cycle:5"), named("cycle:6"), engine).has_value());
}

TEST_CASE("one-dimensional complete decision") {
    CHECK(one_dim_homeomorphic(named("cycle:5"), named("cycle:6")).result ==
          HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(named("cycle:4"), skeleton(whitney_complex(Graph::complete(3)), 1))
              .result == HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(named("star:3"), named("star:4")).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(one_dim_homeomorphic(whitney_complex(Graph::path(3)), whitney_complex(Graph::path(7)))
              .result == HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(named("cycle:5"), whitney_complex(Graph::path(5))).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(one_dim_homeomorphic(named("figure8"), named("digital8")).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(one_dim_homeomorphic(named("figure8"), named("figure8")).result ==
          HomeoResult::Homeomorphic);

    // 0-dimensional: homeomorphic iff equal cardinality
    CHECK(one_dim_homeomorphic(whitney_complex(Graph::edgeless(3)),
                               whitney_complex(Graph::edgeless(3)))
              .result == HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(SimplicialComplex::closure({{0}}), zero_sphere()).result ==
          HomeoResult::NotHomeomorphic);

    CHECK_THROWS_AS(one_dim_homeomorphic(named("octahedron"), named("cycle:4")),
                    std::invalid_argument);
}

TEST_CASE("a wedge of paths can be a path or a star") {
    SimplicialComplex p3 = whitney_complex(Graph::path(3));
    SimplicialComplex at_ends = wedge_sum(p3, 2, p3, 0);   // interval
    SimplicialComplex at_middle = wedge_sum(p3, 1, p3, 0); // three rays
    CHECK(one_dim_homeomorphic(at_ends, whitney_complex(Graph::path(2))).result ==
          HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(at_middle, named("star:3")).result == HomeoResult::Homeomorphic);
    CHECK(one_dim_homeomorphic(at_ends, at_middle).result == HomeoResult::NotHomeomorphic);
}

TEST_CASE("bounded search on the acceptance pairs") {
    RecognitionEngine engine;
    CHECK(bounded_search(named("cycle:5"), named("cycle:6"), engine).result ==
          HomeoResult::Homeomorphic);
    CHECK(bounded_search(named("cycle:5"), whitney_complex(Graph::path(5)), engine).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(bounded_search(named("star:3"), named("star:4"), engine).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(bounded_search(named("figure8"), named("digital8"), engine).result ==
          HomeoResult::NotHomeomorphic);
    CHECK(bounded_search(SimplicialComplex::closure({{0}}), zero_sphere(), engine).result ==
          HomeoResult::NotHomeomorphic);
}

TEST_CASE("complexes are homeomorphic to their Barycentric refinements") {
    RecognitionEngine engine;
    for (const char* key : {"cycle:4", "complete:2", "star:3", "figure8", "octahedron"}) {
        SimplicialComplex g = named(key);
        SimplicialComplex r = barycentric_refine(g);
        HomeoVerdict v = bounded_search(g, r, engine);
        CHECK(v.result == HomeoResult::Homeomorphic);
        HomeoVerdict w = bounded_search(r, g, engine);
        CHECK(w.result == HomeoResult::Homeomorphic);
    }
}

TEST_CASE("verdicts are reflexive and symmetric on small pairs") {
    RecognitionEngine engine;
    const char* keys[] = {"cycle:4", "complete:2", "star:3"};
    for (const char* key : keys)
        CHECK(bounded_search(named(key), named(key), engine).result == HomeoResult::Homeomorphic);
    for (const char* a : keys)
        for (const char* b : keys) {
            HomeoResult ab = bounded_search(named(a), named(b), engine).result;
            HomeoResult ba = bounded_search(named(b), named(a), engine).result;
            CHECK(ab == ba);
        }
}

TEST_CASE("transitivity spot-check on the cyclic family") {
    RecognitionEngine engine;
    HomeoVerdict v56 = bounded_search(named("cycle:5"), named("cycle:6"), engine);
    HomeoVerdict v67 = bounded_search(named("cycle:6"), named("cycle:7"), engine);
    HomeoVerdict v57 = bounded_search(named("cycle:5"), named("cycle:7"), engine);
    CHECK(v56.result == HomeoResult::Homeomorphic);
    CHECK(v67.result == HomeoResult::Homeomorphic);
    CHECK(v57.result == HomeoResult::Homeomorphic);
}

TEST_CASE("not-homeomorphic certificates are recomputable") {
    RecognitionEngine engine;
    HomeoVerdict v = bounded_search(named("cycle:5"), whitney_complex(Graph::path(5)), engine);
    REQUIRE(v.result == HomeoResult::NotHomeomorphic);
    // the named invariant really differs
    CHECK(named("cycle:5").euler_characteristic() !=
          whitney_complex(Graph::path(5)).euler_characteristic());
}

TEST_CASE("one_dim agrees with bounded_search whenever both decide") {
    RecognitionEngine engine;
    const char* keys[] = {"cycle:4", "cycle:5", "star:3", "star:4", "figure8", "digital8"};
    for (const char* a : keys)
        for (const char* b : keys) {
            HomeoVerdict full = bounded_search(named(a), named(b), engine);
            HomeoVerdict quick = one_dim_homeomorphic(named(a), named(b));
            if (full.result != HomeoResult::Inconclusive)
                CHECK(full.result == quick.result);
        }
}

TEST_CASE("dimension-zero cardinality rule through the dispatcher") {
    RecognitionEngine engine;
    SimplicialComplex three = whitney_complex(Graph::edgeless(3));
    SimplicialComplex four = whitney_complex(Graph::edgeless(4));
    CHECK(bounded_search(three, four, engine).result == HomeoResult::NotHomeomorphic);
    CHECK(bounded_search(three, three, engine).result == HomeoResult::Homeomorphic);
}
