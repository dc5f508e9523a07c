#pragma once

#include <cstdint>

#include "ft/complex.hpp"

namespace ft {

/// Euler characteristic of an arbitrary simplex set: sum of parities.
/// A valuation on all subsets.
std::int64_t euler(const SimplexSet& a);
std::int64_t euler(const SimplicialComplex& g);

/// Order-m Wu characteristic of an arbitrary simplex set A: the sum over
/// m-tuples of members of A whose common intersection is itself a member
/// of A, of the product of parities. m = 1 is the Euler characteristic.
/// For closed sets this agrees with the classical nonempty-intersection
/// form; for open sets the membership condition matters. Supported m: 1..4.
std::int64_t wu(const SimplexSet& a, int m);
std::int64_t wu(const SimplicialComplex& g, int m = 2);

/// Gauss-Bonnet star formula: sum_x omega(x) * wu(U(x), m). Agrees with
/// wu(g, m) and avoids the m-fold tuple sum over the whole complex.
std::int64_t wu_fast(const SimplicialComplex& g, int m = 2);

/// Verifies, for m = 1 and 2,
///   sum_x omega(x) wu_m(U(x)) = wu_m(G) = sum_x omega(x) wu_m(B(x))
/// and sum_x omega(x) wu_m(S(x)) = 0, all exactly.
bool ball_formula_check(const SimplicialComplex& g);

/// Relative Wu characteristic of a closed subcomplex H inside G:
/// sum over x in G, y in H with x meet y nonempty of omega(x) omega(y).
std::int64_t relative_wu(const SimplicialComplex& g, const SimplexSet& h);

/// Product of parities, +-1; equals det of the connection matrix.
int fermi_characteristic(const SimplicialComplex& g);

} // namespace ft
