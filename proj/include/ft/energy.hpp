#pragma once

#include <cstdint>

#include "ft/complex.hpp"
#include "ft/exact.hpp"

namespace ft {

/// L(x,y) = 1 when the simplices intersect, 0 otherwise; equivalently the
/// Euler characteristic of core(x) intersect core(y). Symmetric with unit
/// diagonal; det(L) is the Fermi characteristic.
IntMatrix connection_matrix(const SimplicialComplex& g);

enum class Region { Star, Sphere, Ball };

/// g_m(x,y) = omega(x) omega(y) wu_m(R(x) cap R(y)) with R the chosen
/// region. For m = 1 and the star region this is the exact inverse of the
/// connection matrix. Supported m: 1, 2.
IntMatrix green_matrix(const SimplicialComplex& g, int m, Region region = Region::Star);

/// Total of the order-m star Green tensor, sum over m-tuples of
/// prod omega(x_i) * wu_m(cap U(x_i)); equals wu(g, m). The m = 3, 4
/// tensors are streamed, never materialized.
std::int64_t energy_sum(const SimplicialComplex& g, int m);

/// kappa(x) = omega(x) * chi(U(x)); row sum of the m=1 star Green matrix.
/// Summing over all simplices gives chi (Gauss-Bonnet).
std::int64_t curvature(const SimplicialComplex& g, const Simplex& x);

/// Verifies sum_{x,y} g_h(x,y) = omega_h(G) for an arbitrary integer
/// interaction matrix h, where omega_h(A) = sum over member pairs with
/// intersection in A of h(x,y), and g_h(x,y) = omega(x) omega(y)
/// omega_h(U(x) cap U(y)).
bool general_energy_check(const SimplicialComplex& g, const IntMatrix& h);

/// omega_h on a simplex set for an arbitrary interaction matrix.
std::int64_t weighted_energy(const SimplexSet& a, const IntMatrix& h);

struct NullityReport {
    int g1 = 0, b1 = 0, s1 = 0; // star / ball / sphere, m = 1
    int g2 = 0, b2 = 0, s2 = 0; // star / ball / sphere, m = 2
};

/// Exact rational kernel dimensions of the six Green matrices.
NullityReport nullity_report(const SimplicialComplex& g);

} // namespace ft
