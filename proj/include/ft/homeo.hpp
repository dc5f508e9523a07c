#pragma once

#include <optional>
#include <string>

#include "ft/complex.hpp"
#include "ft/recognition.hpp"

namespace ft {

enum class HomeoResult { Homeomorphic, NotHomeomorphic, Inconclusive };

struct HomeoVerdict {
    HomeoResult result = HomeoResult::Inconclusive;
    std::string certificate; // witness description, invariant mismatch, or bounds
};

struct HomeoOptions {
    int max_refinements = 2;
    std::size_t search_budget = 1000000; // DFS nodes for the map search
};

/// Compares topological invariants: dimension, component count, Euler and
/// Wu characteristics, Betti and Wu-Betti tuples, the sphere spectrum (the
/// set of unit-sphere Euler characteristics) and manifold verdicts. Any
/// mismatch is a certified non-homeomorphism.
std::optional<HomeoVerdict> invariant_screen(const SimplicialComplex& g,
                                             const SimplicialComplex& h,
                                             RecognitionEngine& engine);

/// Complete decision for complexes of dimension <= 1: smooth degree-2
/// vertices to a normal form (isolated points, circle count, reduced
/// multigraph on branch vertices) and compare up to isomorphism.
HomeoVerdict one_dim_homeomorphic(const SimplicialComplex& g, const SimplicialComplex& h);

/// Bounded decision procedure: invariant screen, the complete low-dimension
/// decision, isomorphism, common Barycentric refinements with the canonical
/// projection verified, then a budgeted search over monotone surjections
/// with the sphere-preimage and maximal-ball conditions. Never guesses:
/// anything beyond the budgets is Inconclusive.
HomeoVerdict bounded_search(const SimplicialComplex& g, const SimplicialComplex& h,
                            RecognitionEngine& engine, HomeoOptions opts = {});

inline HomeoVerdict homeomorphic(const SimplicialComplex& g, const SimplicialComplex& h,
                                 RecognitionEngine& engine, HomeoOptions opts = {}) {
    return bounded_search(g, h, engine, opts);
}

} // namespace ft
