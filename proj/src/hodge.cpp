#include "ft/hodge.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "ft/recognition.hpp"
#include "ft/topology.hpp"

namespace ft {

namespace {

// indices of the k-simplices in canonical order
std::vector<int> degree_indices(const SimplicialComplex& g, int k) {
    std::vector<int> out;
    for (size_t i = 0; i < g.size(); ++i)
        if (g.simplex(static_cast<int>(i)).dim() == k) out.push_back(static_cast<int>(i));
    return out;
}

int face_sign(const Simplex& face, const Simplex& of) {
    // position of the vertex of `of` missing from `face`, 0-based
    const auto& a = face.vertices();
    const auto& b = of.vertices();
    for (size_t i = 0; i < b.size(); ++i) {
        if (i >= a.size() || a[i] != b[i]) return (i % 2 == 0) ? 1 : -1;
    }
    throw std::logic_error("face_sign: not a codimension-1 face");
}

} // namespace

IntMatrix exterior_derivative(const SimplicialComplex& g) {
    const int n = static_cast<int>(g.size());
    IntMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        for (int f : g.faces_of(i)) d.at(i, f) = face_sign(g.simplex(f), g.simplex(i));
    return d;
}

IntMatrix boundary_block(const SimplicialComplex& g, int k) {
    std::vector<int> rows = degree_indices(g, k);
    std::vector<int> cols = degree_indices(g, k - 1);
    std::vector<int> colpos(g.size(), -1);
    for (size_t c = 0; c < cols.size(); ++c) colpos[cols[c]] = static_cast<int>(c);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (int f : g.faces_of(rows[r]))
            m.at(static_cast<int>(r), colpos[f]) = face_sign(g.simplex(f), g.simplex(rows[r]));
    return m;
}

std::vector<IntMatrix> hodge_blocks(const SimplicialComplex& g) {
    std::vector<IntMatrix> out;
    const int d = g.dimension();
    for (int k = 0; k <= d; ++k) {
        IntMatrix in = boundary_block(g, k);      // C^{k-1} -> C^k
        IntMatrix outb = boundary_block(g, k + 1); // C^k -> C^{k+1}
        IntMatrix lk = in.mul(in.transpose()).add(outb.transpose().mul(outb));
        out.push_back(std::move(lk));
    }
    return out;
}

std::vector<int> betti(const SimplicialComplex& g) {
    const int d = g.dimension();
    std::vector<int> b;
    if (d < 0) return b;
    FVector f = g.f_vector();
    std::vector<int> rank_of(d + 2, 0);
    for (int k = 0; k <= d + 1; ++k) rank_of[k] = rank_exact(boundary_block(g, k));
    for (int k = 0; k <= d; ++k) {
        int out_rank = (k + 1 <= d) ? rank_of[k + 1] : 0;
        b.push_back(static_cast<int>(f[k]) - rank_of[k] - out_rank);
    }
    return b;
}

bool euler_poincare_check(const SimplicialComplex& g) {
    std::vector<int> b = betti(g);
    FVector f = g.f_vector();
    std::int64_t lhs = 0, rhs = 0;
    for (size_t k = 0; k < f.size(); ++k) lhs += (k % 2 ? -1 : 1) * f[k];
    for (size_t k = 0; k < b.size(); ++k) rhs += (k % 2 ? -1 : 1) * b[k];
    return lhs == rhs;
}

bool mckean_singer_check(const SimplicialComplex& g, double t) {
    if (t <= 0) throw std::invalid_argument("mckean_singer_check: t must be positive");
    double str = 0;
    std::vector<IntMatrix> blocks = hodge_blocks(g);
    for (size_t k = 0; k < blocks.size(); ++k) {
        const IntMatrix& lk = blocks[k];
        Eigen::MatrixXd m(lk.rows, lk.cols);
        for (int r = 0; r < lk.rows; ++r)
            for (int c = 0; c < lk.cols; ++c) m(r, c) = static_cast<double>(lk.at(r, c));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        double tr = 0;
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            tr += std::exp(-t * es.eigenvalues()(i));
        str += (k % 2 ? -1.0 : 1.0) * tr;
    }
    return std::abs(str - static_cast<double>(g.euler_characteristic())) < 1e-8;
}

namespace {

struct PairKey {
    int x, y;
    bool operator==(const PairKey& o) const { return x == o.x && y == o.y; }
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        return static_cast<size_t>(k.x) * 1000003u + static_cast<size_t>(k.y);
    }
};

} // namespace

std::vector<int> wu_betti(const SimplicialComplex& g, std::size_t max_pairs) {
    const int n = static_cast<int>(g.size());
    // ordered pairs of intersecting simplices, graded by total cardinality
    std::vector<PairKey> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Simplex::intersect(g.simplex(i), g.simplex(j))) {
                pairs.push_back({i, j});
                if (pairs.size() > max_pairs)
                    throw BudgetExceeded("wu_betti: interaction complex exceeds the pair budget");
            }
    auto level = [&](const PairKey& p) {
        return g.simplex(p.x).card() + g.simplex(p.y).card();
    };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const PairKey& a, const PairKey& b) { return level(a) < level(b); });
    std::unordered_map<PairKey, int, PairKeyHash> pos;
    for (size_t i = 0; i < pairs.size(); ++i) pos[pairs[i]] = static_cast<int>(i);

    std::vector<int> levels; // distinct level values, ascending
    for (const auto& p : pairs)
        if (levels.empty() || levels.back() != level(p)) levels.push_back(level(p));
    std::vector<int> lv_begin(levels.size() + 1, 0);
    {
        size_t li = 0;
        for (size_t i = 0; i < pairs.size(); ++i) {
            while (level(pairs[i]) != levels[li]) lv_begin[++li] = static_cast<int>(i);
        }
        lv_begin[levels.size()] = static_cast<int>(pairs.size());
        for (size_t l = li + 1; l < levels.size(); ++l) lv_begin[l] = lv_begin[levels.size()];
    }
    auto level_index = [&](int value) -> int {
        auto it = std::lower_bound(levels.begin(), levels.end(), value);
        if (it == levels.end() || *it != value) return -1;
        return static_cast<int>(it - levels.begin());
    };

    // dd block from level index li to the level one value below; rows local
    // to the source level, zero columns when nothing lies below
    auto block = [&](int li) -> IntMatrix {
        int value = levels[li];
        int below = level_index(value - 1);
        int r0 = lv_begin[li], r1 = lv_begin[li + 1];
        int c0 = below < 0 ? 0 : lv_begin[below];
        int c1 = below < 0 ? 0 : lv_begin[below + 1];
        IntMatrix m(r1 - r0, c1 - c0);
        if (below < 0) return m;
        for (int r = r0; r < r1; ++r) {
            const PairKey& p = pairs[r];
            const Simplex& x = g.simplex(p.x);
            const Simplex& y = g.simplex(p.y);
            // first-coordinate deletions: sign (-1)^k, k the 1-based position
            if (x.card() > 1) {
                for (int k = 1; k <= x.card(); ++k) {
                    int xi = g.index_of(x.erase_at(k - 1));
                    auto it = pos.find({xi, p.y});
                    if (it != pos.end()) m.at(r - r0, it->second - c0) += (k % 2 ? -1 : 1);
                }
            }
            // second-coordinate deletions: sign (-1)^(|x| + k)
            if (y.card() > 1) {
                for (int k = 1; k <= y.card(); ++k) {
                    int yi = g.index_of(y.erase_at(k - 1));
                    auto it = pos.find({p.x, yi});
                    if (it != pos.end())
                        m.at(r - r0, it->second - c0) += ((x.card() + k) % 2 ? -1 : 1);
                }
            }
        }
        return m;
    };

    std::vector<int> out;
    for (size_t li = 0; li < levels.size(); ++li) {
        int nl = lv_begin[li + 1] - lv_begin[li];
        // contributions into this level from above, and out of it downward
        IntMatrix down = block(static_cast<int>(li)); // rows: this level, cols: below
        IntMatrix up;                                  // rows: level above, cols: this level
        int above = level_index(levels[li] + 1);
        up = (above >= 0) ? block(above) : IntMatrix(0, nl);
        if (up.cols != nl) up = IntMatrix(0, nl);
        IntMatrix stacked = down.transpose().vstack(up);
        out.push_back(nl - rank_exact(stacked));
    }
    return out;
}

// ---- simplex maps ----

SimplexMap SimplexMap::from_vertex_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                       const std::map<VertexId, VertexId>& vmap) {
    SimplexMap f;
    f.dom_ = &dom;
    f.cod_ = &cod;
    for (VertexId v : dom.vertex_list())
        if (!vmap.count(v)) throw std::invalid_argument("vertex map: not total on the domain");
    f.image_.resize(dom.size());
    for (size_t i = 0; i < dom.size(); ++i) {
        std::vector<VertexId> img;
        for (VertexId v : dom.simplex(static_cast<int>(i)).vertices()) img.push_back(vmap.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        int idx = cod.index_of(Simplex(img));
        if (idx < 0)
            throw std::invalid_argument("vertex map: image of " +
                                        dom.simplex(static_cast<int>(i)).str() +
                                        " is not a simplex of the codomain");
        f.image_[i] = idx;
    }
    f.vmap_ = vmap;
    return f;
}

SimplexMap SimplexMap::from_images(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                   std::vector<int> image_indices) {
    if (image_indices.size() != dom.size())
        throw std::invalid_argument("simplex map: image list must be total");
    for (int idx : image_indices)
        if (idx < 0 || idx >= static_cast<int>(cod.size()))
            throw std::invalid_argument("simplex map: image index out of range");
    SimplexMap f;
    f.dom_ = &dom;
    f.cod_ = &cod;
    f.image_ = std::move(image_indices);
    return f;
}

SimplexMap SimplexMap::identity(const SimplicialComplex& g) {
    std::map<VertexId, VertexId> id;
    for (VertexId v : g.vertex_list()) id[v] = v;
    return from_vertex_map(g, g, id);
}

SimplexMap SimplexMap::constant(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                const Simplex& value) {
    int idx = cod.index_of(value);
    if (idx < 0) throw std::invalid_argument("constant map: value not in codomain");
    SimplexMap f;
    f.dom_ = &dom;
    f.cod_ = &cod;
    f.image_.assign(dom.size(), idx);
    return f;
}

bool is_continuous(const SimplexMap& f) {
    const SimplicialComplex& dom = f.dom();
    const SimplicialComplex& cod = f.cod();
    for (size_t yi = 0; yi < cod.size(); ++yi) {
        SimplexSet pre(dom);
        const std::uint64_t* st = cod.star_mask(static_cast<int>(yi));
        for (size_t xi = 0; xi < dom.size(); ++xi) {
            int im = f.image_index(static_cast<int>(xi));
            if ((st[im >> 6] >> (im & 63)) & 1) pre.add(static_cast<int>(xi));
        }
        if (!is_open(dom, pre)) return false;
    }
    return true;
}

bool is_simplicial(const SimplexMap& f) {
    const SimplicialComplex& dom = f.dom();
    const SimplicialComplex& cod = f.cod();
    std::map<VertexId, VertexId> vmap;
    for (VertexId v : dom.vertex_list()) {
        const Simplex& img = f.image(dom.index_of(Simplex{v}));
        if (img.card() != 1) return false;
        vmap[v] = img.vertices()[0];
    }
    for (size_t i = 0; i < dom.size(); ++i) {
        std::vector<VertexId> img;
        for (VertexId v : dom.simplex(static_cast<int>(i)).vertices()) img.push_back(vmap[v]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        int idx = cod.index_of(Simplex(img));
        if (idx < 0 || idx != f.image_index(static_cast<int>(i))) return false;
    }
    return true;
}

namespace {

// parity of the permutation sending ascending x to its images inside
// ascending f(x); requires a vertex-backed map and preserved dimension
int permutation_sign(const SimplexMap& f, int idx) {
    const Simplex& x = f.dom().simplex(idx);
    const Simplex& y = f.image(idx);
    if (y.card() != x.card()) throw std::logic_error("permutation_sign: dimension drops");
    const auto& vm = f.vertex_map();
    if (!vm) throw std::domain_error("koopman: map must be lifted from a vertex map");
    std::vector<int> perm;
    for (VertexId v : x.vertices()) {
        VertexId w = vm->at(v);
        const auto& yv = y.vertices();
        perm.push_back(static_cast<int>(std::lower_bound(yv.begin(), yv.end(), w) - yv.begin()));
    }
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

} // namespace

IntMatrix koopman(const SimplexMap& f) {
    if (&f.dom() != &f.cod()) throw std::invalid_argument("koopman: needs a self-map");
    const SimplicialComplex& g = f.dom();
    const int n = static_cast<int>(g.size());
    IntMatrix u(n, n);
    for (int i = 0; i < n; ++i) {
        int j = f.image_index(i);
        if (g.simplex(j).dim() != g.simplex(i).dim()) continue; // dimension drops: zero row
        u.at(i, j) = permutation_sign(f, i);
    }
    return u;
}

std::int64_t fixed_point_index_sum(const SimplexMap& f) {
    if (&f.dom() != &f.cod()) throw std::invalid_argument("index sum: needs a self-map");
    const SimplicialComplex& g = f.dom();
    std::int64_t total = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        int idx = static_cast<int>(i);
        if (f.image_index(idx) != idx) continue;
        total += g.simplex(idx).parity() * permutation_sign(f, idx);
    }
    return total;
}

std::int64_t lefschetz_number(const SimplexMap& f) {
    if (&f.dom() != &f.cod()) throw std::invalid_argument("lefschetz: needs a self-map");
    if (!is_continuous(f)) throw std::invalid_argument("lefschetz: map is not continuous");
    const SimplicialComplex& g = f.dom();
    IntMatrix u = koopman(f);
    IntMatrix d = exterior_derivative(g);
    if (!(u.mul(d) == d.mul(u)))
        throw std::logic_error("lefschetz: Koopman matrix is not a cochain map");

    mpq_class chi_f = 0;
    for (int k = 0; k <= g.dimension(); ++k) {
        std::vector<int> idxs = degree_indices(g, k);
        IntMatrix uk(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()));
        for (size_t r = 0; r < idxs.size(); ++r)
            for (size_t c = 0; c < idxs.size(); ++c)
                uk.at(static_cast<int>(r), static_cast<int>(c)) = u.at(idxs[r], idxs[c]);
        // trace on cohomology = trace on cocycles minus trace on coboundaries
        IntMatrix outb = boundary_block(g, k + 1);
        IntMatrix inb = boundary_block(g, k);
        // cocycles: kernel of the outgoing derivative C^k -> C^{k+1}
        // (rows of outb index (k+1)-simplices; its kernel lives in C^k)
        auto ker = kernel_basis(outb);
        mpq_class tr_ker = restricted_trace(uk, ker);
        auto im = column_space_basis(inb);
        mpq_class tr_im = restricted_trace(uk, im);
        mpq_class term = tr_ker - tr_im;
        chi_f += (k % 2 ? -term : term);
    }
    if (chi_f.get_den() != 1) throw std::logic_error("lefschetz: non-integer supertrace");
    return static_cast<std::int64_t>(mpz_get_si(chi_f.get_num().get_mpz_t()));
}

bool lefschetz_check(const SimplexMap& f) {
    return lefschetz_number(f) == fixed_point_index_sum(f);
}

} // namespace ft
