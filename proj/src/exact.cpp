#include "ft/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace ft {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix out(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            long long v = at(r, k);
            if (!v) continue;
            const long long* src = &o.a[static_cast<size_t>(k) * o.cols];
            long long* dst = &out.a[static_cast<size_t>(r) * o.cols];
            for (int c = 0; c < o.cols; ++c) dst[c] += v * src[c];
        }
    return out;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("add: shape mismatch");
    IntMatrix out(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + o.a[i];
    return out;
}

bool IntMatrix::is_zero() const {
    for (long long v : a)
        if (v) return false;
    return true;
}

long long IntMatrix::sum() const {
    long long s = 0;
    for (long long v : a) s += v;
    return s;
}

long long IntMatrix::trace() const {
    long long s = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) s += at(i, i);
    return s;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols != o.cols) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(rows + o.rows, cols);
    std::copy(a.begin(), a.end(), out.a.begin());
    std::copy(o.a.begin(), o.a.end(), out.a.begin() + a.size());
    return out;
}

namespace {

// Sparse row representation for the unit-pivot elimination phase.
struct SparseRows {
    std::vector<std::vector<std::pair<int, long long>>> rows; // sorted by col
    std::vector<char> row_active, col_active;
    std::vector<int> col_count;

    explicit SparseRows(const IntMatrix& m)
        : rows(m.rows), row_active(m.rows, 1), col_active(m.cols, 1), col_count(m.cols, 0) {
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                if (m.at(r, c)) {
                    rows[r].push_back({c, m.at(r, c)});
                    col_count[c]++;
                }
    }
};

// row_j += f * row_p, merging sorted column lists.
void axpy_row(std::vector<std::pair<int, long long>>& rj,
              const std::vector<std::pair<int, long long>>& rp, long long f,
              std::vector<int>& col_delta_pos, std::vector<int>& col_delta_neg,
              bool& overflow) {
    std::vector<std::pair<int, long long>> out;
    out.reserve(rj.size() + rp.size());
    size_t i = 0, j = 0;
    const long long LIM = 1ll << 44;
    while (i < rj.size() || j < rp.size()) {
        if (j == rp.size() || (i < rj.size() && rj[i].first < rp[j].first)) {
            out.push_back(rj[i++]);
        } else if (i == rj.size() || rp[j].first < rj[i].first) {
            long long v = f * rp[j].second;
            if (std::llabs(f) > 0 && std::llabs(rp[j].second) > LIM / std::llabs(f)) overflow = true;
            out.push_back({rp[j].first, v});
            col_delta_pos.push_back(rp[j].first);
            ++j;
        } else {
            if (std::llabs(f) > 0 && std::llabs(rp[j].second) > LIM / std::llabs(f)) overflow = true;
            long long v = rj[i].second + f * rp[j].second;
            if (v != 0)
                out.push_back({rj[i].first, v});
            else
                col_delta_neg.push_back(rj[i].first);
            ++i;
            ++j;
        }
    }
    rj = std::move(out);
}

int bareiss_rank(std::vector<std::vector<mpz_class>>& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int rank = 0;
    for (int pc = 0; rank < rows && pc < cols; ++pc) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][pc] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = pc + 1; c < cols; ++c) {
                m[r][c] = (m[rank][pc] * m[r][c] - m[r][pc] * m[rank][c]) / prev;
            }
            m[r][pc] = 0;
        }
        prev = m[rank][pc];
        ++rank;
    }
    return rank;
}

} // namespace

int rank_exact(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    SparseRows s(m);
    int rank = 0;
    std::vector<int> dpos, dneg;

    // Phase 1: eliminate on +-1 pivots, cheapest (Markowitz-ish) first.
    for (;;) {
        int best_r = -1, best_c = -1;
        long long best_cost = std::numeric_limits<long long>::max();
        for (int r = 0; r < m.rows; ++r) {
            if (!s.row_active[r]) continue;
            for (auto& [c, v] : s.rows[r]) {
                if (!s.col_active[c]) continue;
                if (v != 1 && v != -1) continue;
                long long cost =
                    static_cast<long long>(s.rows[r].size() - 1) * (s.col_count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                    if (cost == 0) break;
                }
            }
            if (best_cost == 0) break;
        }
        if (best_r < 0) break;

        long long pv = 0;
        for (auto& [c, v] : s.rows[best_r])
            if (c == best_c) pv = v;
        bool overflow = false;
        for (int r = 0; r < m.rows && !overflow; ++r) {
            if (!s.row_active[r] || r == best_r) continue;
            long long v = 0;
            for (auto& [c, val] : s.rows[r])
                if (c == best_c) {
                    v = val;
                    break;
                }
            if (!v) continue;
            dpos.clear();
            dneg.clear();
            axpy_row(s.rows[r], s.rows[best_r], -v * pv, dpos, dneg, overflow);
            for (int c : dpos) s.col_count[c]++;
            for (int c : dneg) s.col_count[c]--;
        }
        if (overflow) break; // fall through to the exact big-integer pass
        s.row_active[best_r] = 0;
        s.col_active[best_c] = 0;
        for (auto& [c, v] : s.rows[best_r]) s.col_count[c]--;
        ++rank;
    }

    // Phase 2: whatever is left has no unit entries (or grew too large);
    // finish with fraction-free Bareiss over mpz.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < m.rows; ++r)
        if (s.row_active[r] && !s.rows[r].empty()) {
            bool any = false;
            for (auto& [c, v] : s.rows[r])
                if (s.col_active[c]) {
                    any = true;
                    break;
                }
            if (any) live_rows.push_back(r);
        }
    if (live_rows.empty()) return rank;
    std::vector<int> colmap(m.cols, -1);
    for (int r : live_rows)
        for (auto& [c, v] : s.rows[r])
            if (s.col_active[c] && colmap[c] < 0) {
                colmap[c] = static_cast<int>(live_cols.size());
                live_cols.push_back(c);
            }
    std::vector<std::vector<mpz_class>> dense(live_rows.size(),
                                              std::vector<mpz_class>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (auto& [c, v] : s.rows[live_rows[i]])
            if (s.col_active[c]) dense[i][colmap[c]] = static_cast<long>(v);
    return rank + bareiss_rank(dense);
}

mpz_class det_exact(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const int n = m.rows;
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = static_cast<long>(m.at(r, c));
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return 0;
        if (pr != k) {
            std::swap(a[pr], a[k]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int det_sign_of_unimodular(const IntMatrix& l, const IntMatrix& g) {
    if (!(l.mul(g) == IntMatrix::identity(l.rows)))
        throw std::invalid_argument("det_sign_of_unimodular: g is not an exact inverse of l");
    // det(l) * det(g) = 1 over Z, so det(l) is +-1; one odd prime decides.
    const long long p = 2147483629ll;
    const int n = l.rows;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = ((l.at(r, c) % p) + p) % p;
    auto powmod = [&](long long b, long long e) {
        long long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = static_cast<long long>((__int128)r * b % p);
            b = static_cast<long long>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    long long det = 1;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k]) {
                pr = r;
                break;
            }
        if (pr < 0) throw std::logic_error("unimodular matrix singular mod p");
        if (pr != k) {
            std::swap(a[pr], a[k]);
            det = p - det;
        }
        det = static_cast<long long>((__int128)det * a[k][k] % p);
        long long inv = powmod(a[k][k], p - 2);
        for (int r = k + 1; r < n; ++r) {
            if (!a[r][k]) continue;
            long long f = static_cast<long long>((__int128)a[r][k] * inv % p);
            for (int c = k; c < n; ++c) {
                a[r][c] = (a[r][c] - static_cast<long long>((__int128)f * a[k][c] % p) + p) % p;
            }
        }
    }
    if (det == 1) return 1;
    if (det == p - 1) return -1;
    throw std::logic_error("det_sign_of_unimodular: determinant not a unit");
}

namespace {

// Reduced row echelon form over Q; returns pivot column indices.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        mpq_class inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<mpq_class>> kernel_basis(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = static_cast<long>(m.at(r, c));
    std::vector<int> pivots = rref(a);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<mpq_class>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<mpq_class> v(m.cols, 0);
        v[c] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -a[pi][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<mpq_class>> column_space_basis(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = static_cast<long>(m.at(r, c));
    std::vector<int> pivots = rref(a);
    std::vector<std::vector<mpq_class>> basis;
    for (int c : pivots) {
        std::vector<mpq_class> v(m.rows);
        for (int r = 0; r < m.rows; ++r) v[r] = static_cast<long>(m.at(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

mpq_class restricted_trace(const IntMatrix& u, const std::vector<std::vector<mpq_class>>& basis) {
    const int b = static_cast<int>(basis.size());
    if (b == 0) return 0;
    const int n = static_cast<int>(basis[0].size());
    if (u.rows != n || u.cols != n) throw std::invalid_argument("restricted_trace: shape mismatch");
    // Solve B T = U B; RREF of [B | U B] exposes T on the pivot rows.
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * b, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < b; ++c) aug[r][c] = basis[c][r];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < b; ++c) {
            mpq_class acc = 0;
            for (int k = 0; k < n; ++k)
                if (u.at(r, k) != 0) acc += mpq_class(static_cast<long>(u.at(r, k))) * basis[c][k];
            aug[r][b + c] = acc;
        }
    std::vector<int> pivots = rref(aug);
    int lead = 0;
    for (int c : pivots)
        if (c < b) ++lead;
    if (lead != b) throw std::logic_error("restricted_trace: basis not full rank");
    for (size_t r = lead; r < aug.size(); ++r)
        for (int c = 0; c < 2 * b; ++c)
            if (aug[r][c] != 0 && c >= b)
                throw std::logic_error("restricted_trace: subspace not invariant");
    mpq_class tr = 0;
    for (int i = 0; i < b; ++i) tr += aug[i][b + i];
    return tr;
}

} // namespace ft
