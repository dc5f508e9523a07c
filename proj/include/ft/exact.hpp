#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace ft {

/// Dense integer matrix (row-major int64). Exact arithmetic throughout;
/// anything that could overflow is routed through GMP.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix add(const IntMatrix& o) const;
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    long long sum() const;
    long long trace() const;

    /// Vertical stack: [this; o] (column counts must agree).
    IntMatrix vstack(const IntMatrix& o) const;
};

/// Exact rank over Q. Sparse elimination on unit pivots first, then a
/// fraction-free Bareiss pass (GMP) on whatever dense core remains.
int rank_exact(const IntMatrix& m);

inline int nullity_exact(const IntMatrix& m) { return m.cols - rank_exact(m); }

/// Exact determinant, fraction-free Bareiss over mpz.
mpz_class det_exact(const IntMatrix& m);

/// For a matrix L with a known exact integer inverse g (verified here),
/// det(L) is a unit; returns +1 or -1, decided modulo a prime.
int det_sign_of_unimodular(const IntMatrix& l, const IntMatrix& g);

/// Basis of the rational kernel, as column vectors.
std::vector<std::vector<mpq_class>> kernel_basis(const IntMatrix& m);

/// Basis of the column space, as column vectors.
std::vector<std::vector<mpq_class>> column_space_basis(const IntMatrix& m);

/// Trace of U restricted to the invariant subspace spanned by `basis`
/// (columns, full rank). Throws when U does not preserve the span.
mpq_class restricted_trace(const IntMatrix& u, const std::vector<std::vector<mpq_class>>& basis);

} // namespace ft
