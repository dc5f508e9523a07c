#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ft/complex.hpp"
#include "ft/graph.hpp"

namespace ft {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct RecognitionOptions {
    /// Candidate examinations allotted to one public contractibility query.
    std::size_t contractible_budget = 500000;
    /// Candidate examinations allotted to the puncture search of one
    /// sphere query. Collapses of genuine spheres finish far below this;
    /// complexes whose punctures defeat the search (homology spheres) are
    /// reported as not recognized once it is spent.
    std::size_t puncture_budget = 120000;
    /// Complexes at most this large are memoized by canonical form inside
    /// the contractibility search.
    std::size_t memo_size_cap = 120;
};

/// Recursive recognition of contractible complexes, spheres, balls and
/// manifolds, with a shared verdict cache keyed on canonical forms.
/// Verdict functions are reentrant; the cache is synchronized.
class RecognitionEngine {
public:
    explicit RecognitionEngine(RecognitionOptions opts = {}) : opts_(opts) {}

    /// Exact recursive contractibility (collapsibility-style): true iff a
    /// single point, or some simplex x has both S(x) and G \ U(x)
    /// contractible. Throws BudgetExceeded when the search could not be
    /// completed either way.
    bool is_contractible(const SimplicialComplex& g);

    /// d when g is a d-sphere (empty complex gives -1). A nullopt is
    /// certified when the search completed, otherwise the complex defeated
    /// the puncture budget and is reported as not recognized;
    /// last_query_exhausted() distinguishes the two.
    std::optional<int> sphere_dimension(const SimplicialComplex& g);

    /// d when every unit sphere is a (d-1)-sphere.
    std::optional<int> manifold_dimension(const SimplicialComplex& g);

    struct BoundaryInfo {
        int dim = 0;
        SimplicialComplex boundary; // a (d-1)-manifold, possibly empty
    };

    /// Every unit sphere a (d-1)-sphere or (d-1)-ball; boundary simplices
    /// are those with ball spheres, returned as the complex they generate.
    std::optional<BoundaryInfo> manifold_with_boundary(const SimplicialComplex& g);

    /// Manifold with boundary, contractible, boundary a (d-1)-sphere.
    std::optional<int> ball_dimension(const SimplicialComplex& g);

    /// Dehn-Sommerville recursion, primed with X_{-1} = {empty complex}:
    /// chi(g) = 1 + (-1)^d and every unit sphere in X_{d-1}.
    bool is_dehn_sommerville(const SimplicialComplex& g, int d);

    bool last_query_exhausted() const { return last_exhausted_; }

private:
    enum class Tri { False, True, Exhausted };

    Tri contractible_rec(const SimplicialComplex& g, std::size_t& budget);
    std::optional<int> sphere_rec(const SimplicialComplex& g, bool& exhausted);
    std::optional<int> manifold_rec(const SimplicialComplex& g, bool& exhausted);

    SimplicialComplex sphere_complex(const SimplicialComplex& g, int idx) const;
    SimplicialComplex minus_star(const SimplicialComplex& g, int idx) const;

    RecognitionOptions opts_;
    bool last_exhausted_ = false;

    std::mutex mu_;
    std::unordered_map<std::string, bool> contractible_memo_;
    std::unordered_map<std::string, std::optional<int>> sphere_memo_, manifold_memo_, ball_memo_;
    std::unordered_map<std::string, bool> ds_memo_; // keyed by form + dimension
};

/// Poincare-Hopf index i_f(v) = 1 - chi(S^-(v)) for a locally injective
/// vertex function; the indices sum to chi of the Whitney complex.
int poincare_hopf_index(const Graph& g, const std::map<VertexId, double>& f, VertexId v);

enum class MorsePointType { Critical, Regular, Irregular };

struct MorseData {
    std::map<VertexId, double> f;
    std::map<VertexId, MorsePointType> type;
    std::map<VertexId, int> morse_index; // critical points only
    std::map<VertexId, int> ph_index;    // all points
};

/// Labels each vertex: critical of index k when S^-(v) is a (k-1)-sphere,
/// regular when S^-(v) is contractible, irregular otherwise.
MorseData morse_classify(const Graph& g, const std::map<VertexId, double>& f,
                         RecognitionEngine& engine);

/// Level surface {f = c}: the graph on Whitney simplices carrying values on
/// both sides of c, with containment edges. Throws when c hits a vertex
/// value. On a d-manifold the result is empty or a (d-1)-manifold.
Graph level_set(const Graph& g, const std::map<VertexId, double>& f, double c);

} // namespace ft
