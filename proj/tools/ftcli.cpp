// Command-line front end: named-complex generation, invariant reports,
// matrix exports, verification suites, homeomorphism tests.
//
// Exit codes: 0 ok, 1 property failure, 2 parse error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ft/canonical.hpp"
#include "ft/characteristics.hpp"
#include "ft/energy.hpp"
#include "ft/graph.hpp"
#include "ft/hodge.hpp"
#include "ft/homeo.hpp"
#include "ft/io.hpp"
#include "ft/recognition.hpp"
#include "ft/registry.hpp"
#include "ft/rng.hpp"
#include "ft/topology.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBudgetExceeded = 3;

ft::SimplicialComplex load_input(const std::string& arg) {
    if (auto c = ft::make_named_complex(arg)) return *c;
    return ft::load_complex(arg);
}

int cmd_gen(const std::string& key, const std::string& out) {
    auto c = ft::make_named_complex(key);
    if (!c) {
        std::cerr << "unknown registry key: " << key << "\n";
        return kExitParseError;
    }
    std::string text = ft::complex_to_json_text(*c);
    if (out.empty() || out == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        f << text << "\n";
    }
    return kExitOk;
}

int cmd_report(const std::string& input, bool with_wu3, bool with_wubetti, bool topo_count,
               std::size_t limit) {
    ft::SimplicialComplex g = load_input(input);
    json j;
    j["schema"] = "invariant-report/1";
    j["simplices"] = g.size();
    j["dimension"] = g.dimension();
    j["f_vector"] = g.f_vector();
    j["euler"] = g.euler_characteristic();
    j["wu2"] = ft::wu_fast(g, 2);
    j["fermi"] = ft::fermi_characteristic(g);
    if (with_wu3) j["wu3"] = ft::wu_fast(g, 3);
    if (!g.is_empty()) {
        j["betti"] = ft::betti(g);
        if (with_wubetti) j["wu_betti"] = ft::wu_betti(g);
    }
    ft::RecognitionEngine engine;
    if (auto d = engine.manifold_dimension(g))
        j["manifold"] = *d;
    else
        j["manifold"] = nullptr;
    if (topo_count) {
        ft::TopologyResult t = ft::enumerate_topology(g, limit, false);
        j["open_sets"] = t.count;
        j["open_sets_complete"] = t.complete;
        if (!t.complete) {
            std::cout << j.dump() << "\n";
            return kExitBudgetExceeded;
        }
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_refine(const std::string& input, const std::string& out, int edge_a, int edge_b) {
    ft::SimplicialComplex g = load_input(input);
    ft::SimplicialComplex result;
    if (edge_a >= 0 && edge_b >= 0) {
        // edge refinement happens at graph level on the 1-skeleton
        std::vector<std::pair<ft::VertexId, ft::VertexId>> es;
        for (const auto& s : g.simplices())
            if (s.dim() == 1) es.push_back({s.vertices()[0], s.vertices()[1]});
        ft::Graph graph(g.vertex_list(), es);
        result = ft::whitney_complex(ft::edge_refine(graph, edge_a, edge_b));
    } else {
        result = ft::barycentric_refine(g);
    }
    std::string text = ft::complex_to_json_text(result);
    if (out.empty() || out == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        f << text << "\n";
    }
    return kExitOk;
}

int cmd_matrix(const std::string& input, const std::string& which, const std::string& format) {
    ft::SimplicialComplex g = load_input(input);
    ft::IntMatrix m;
    if (which == "L") {
        m = ft::connection_matrix(g);
    } else if (which == "g1") {
        m = ft::green_matrix(g, 1, ft::Region::Star);
    } else if (which == "g2") {
        m = ft::green_matrix(g, 2, ft::Region::Star);
    } else if (which == "s1") {
        m = ft::green_matrix(g, 1, ft::Region::Sphere);
    } else if (which == "s2") {
        m = ft::green_matrix(g, 2, ft::Region::Sphere);
    } else if (which == "b1") {
        m = ft::green_matrix(g, 1, ft::Region::Ball);
    } else if (which == "b2") {
        m = ft::green_matrix(g, 2, ft::Region::Ball);
    } else if (which == "d") {
        m = ft::exterior_derivative(g);
    } else if (which.rfind("hodge:", 0) == 0) {
        int k = std::stoi(which.substr(6));
        auto blocks = ft::hodge_blocks(g);
        if (k < 0 || k >= static_cast<int>(blocks.size())) {
            std::cerr << "hodge block out of range\n";
            return kExitParseError;
        }
        m = blocks[k];
    } else {
        std::cerr << "unknown matrix: " << which << "\n";
        return kExitParseError;
    }
    if (format == "csv")
        std::cout << ft::matrix_to_csv(m);
    else
        std::cout << ft::matrix_to_json_text(m, g) << "\n";
    return kExitOk;
}

int cmd_betti(const std::string& input, bool wu) {
    ft::SimplicialComplex g = load_input(input);
    json j = wu ? json(ft::wu_betti(g)) : json(ft::betti(g));
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_homeo(const std::string& a, const std::string& b, int max_refine) {
    ft::SimplicialComplex g = load_input(a), h = load_input(b);
    ft::RecognitionEngine engine;
    ft::HomeoOptions opts;
    opts.max_refinements = max_refine;
    ft::HomeoVerdict v = ft::homeomorphic(g, h, engine, opts);
    json j;
    j["result"] = v.result == ft::HomeoResult::Homeomorphic       ? "homeomorphic"
                  : v.result == ft::HomeoResult::NotHomeomorphic ? "not_homeomorphic"
                                                                 : "inconclusive";
    j["certificate"] = v.certificate;
    std::cout << j.dump() << "\n";
    return v.result == ft::HomeoResult::Inconclusive ? kExitBudgetExceeded : kExitOk;
}

int cmd_lefschetz(const std::string& input, const std::string& map_file) {
    ft::SimplicialComplex g = load_input(input);
    auto vmap = ft::load_vertex_map(map_file);
    ft::SimplexMap f = ft::SimplexMap::from_vertex_map(g, g, vmap);
    if (!ft::is_continuous(f)) {
        std::cerr << "map is not continuous\n";
        return kExitPropertyFailure;
    }
    json j;
    j["lefschetz_number"] = ft::lefschetz_number(f);
    j["index_sum"] = ft::fixed_point_index_sum(f);
    j["fixed_point_formula_holds"] = (j["lefschetz_number"] == j["index_sum"]);
    std::cout << j.dump() << "\n";
    return j["fixed_point_formula_holds"].get<bool>() ? kExitOk : kExitPropertyFailure;
}

// ---- verification suites ----

struct SuiteReport {
    int checks = 0, failures = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            std::cout << "FAIL " << what << "\n";
        } else {
            std::cout << "ok   " << what << "\n";
        }
    }
};

std::vector<ft::SimplicialComplex> verify_targets(std::uint64_t seed, size_t max_size) {
    std::vector<ft::SimplicialComplex> out;
    for (const auto& key : ft::registry_keys()) {
        auto c = ft::make_named_complex(key);
        if (c && c->size() <= max_size) out.push_back(*c);
    }
    for (int i = 0; i < 8; ++i) {
        ft::SimplicialComplex w = ft::whitney_complex(ft::random_graph(9, 16, seed + i));
        if (w.size() <= max_size) out.push_back(w);
    }
    return out;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    SuiteReport rep;
    if (suite == "energy") {
        for (const auto& g : verify_targets(seed, 120)) {
            ft::IntMatrix l = ft::connection_matrix(g);
            ft::IntMatrix g1 = ft::green_matrix(g, 1);
            rep.expect(l.mul(g1) == ft::IntMatrix::identity(l.rows), "L*g1 = I");
            rep.expect(g1.sum() == g.euler_characteristic(), "sum g1 = chi");
            rep.expect(ft::energy_sum(g, 2) == ft::wu(g, 2), "sum g2 = wu2");
            rep.expect(ft::det_sign_of_unimodular(l, g1) == ft::fermi_characteristic(g),
                       "det L = fermi");
        }
    } else if (suite == "gaussbonnet") {
        for (const auto& g : verify_targets(seed, 120)) {
            rep.expect(ft::ball_formula_check(g), "star/ball/sphere formulas");
            std::int64_t total = 0;
            for (const auto& s : g.simplices()) total += ft::curvature(g, s);
            rep.expect(total == g.euler_characteristic(), "sum curvature = chi");
        }
    } else if (suite == "lefschetz") {
        for (const auto& g : verify_targets(seed, 400)) {
            ft::SimplexMap id = ft::SimplexMap::identity(g);
            rep.expect(ft::lefschetz_number(id) == g.euler_characteristic(),
                       "identity Lefschetz number = chi");
        }
    } else if (suite == "valuation") {
        for (const char* key : {"complete:2", "complete:3", "cycle:4", "cycle:5"}) {
            ft::SimplicialComplex g = *ft::make_named_complex(key);
            ft::TopologyResult t = ft::enumerate_topology(g, 200);
            if (!t.complete) continue;
            bool ok = true;
            const auto& opens = t.topology->opens;
            for (size_t i = 0; i < opens.size() && ok; ++i)
                for (size_t j = i; j < opens.size() && ok; ++j)
                    for (int m = 1; m <= 3; ++m)
                        ok = ok && ft::wu(opens[i].unite(opens[j]), m) ==
                                       ft::wu(opens[i], m) + ft::wu(opens[j], m) -
                                           ft::wu(opens[i].intersect(opens[j]), m);
            rep.expect(ok, std::string("open-set valuation on ") + key);
        }
        // the closed-set counterexample: the figure-8 wedge
        ft::SimplicialComplex c4 = *ft::make_named_complex("cycle:4");
        ft::SimplicialComplex f8 = ft::wedge_sum(c4, 0, c4, 0);
        rep.expect(ft::wu(f8, 2) == 7, "figure-8 Wu = 7");
        rep.expect(ft::wu(f8, 2) != ft::wu(c4, 2) + ft::wu(c4, 2) - 1,
                   "closed-set valuation fails on the wedge");
    } else if (suite == "refinement") {
        for (const char* key : {"complete:2", "complete:3", "cycle:4", "cycle:5", "figure8",
                                "digital8", "fig1"}) {
            ft::SimplicialComplex g = *ft::make_named_complex(key);
            ft::SimplicialComplex r = ft::barycentric_refine(g);
            rep.expect(g.euler_characteristic() == r.euler_characteristic(),
                       std::string("chi invariant: ") + key);
            rep.expect(ft::wu_fast(g, 2) == ft::wu_fast(r, 2), std::string("wu invariant: ") + key);
            rep.expect(ft::betti(g) == ft::betti(r), std::string("betti invariant: ") + key);
        }
        // relative Wu under refinement: observational only, no assertion;
        // whether the pair value is topological is an open question
        for (const char* key : {"cycle:4", "figure8", "fig1"}) {
            ft::SimplicialComplex g = *ft::make_named_complex(key);
            ft::SimplexSet h(g);
            for (int idx : ft::core(g, ft::Simplex{0}).members()) h.add(idx);
            std::int64_t before = ft::relative_wu(g, h);
            ft::SimplicialComplex r = ft::barycentric_refine(g);
            ft::SimplexSet hr(r);
            for (size_t i = 0; i < r.size(); ++i) {
                bool inside = true;
                for (ft::VertexId v : r.simplex(static_cast<int>(i)).vertices())
                    if (!h.test(v)) inside = false;
                if (inside) hr.add(static_cast<int>(i));
            }
            std::int64_t after = ft::relative_wu(r, hr);
            std::cout << "note relative wu of (" << key << ", vertex core): " << before
                      << " -> " << after << " under refinement\n";
        }
    } else {
        std::cerr << "unknown suite: " << suite
                  << " (expected energy|gaussbonnet|lefschetz|valuation|refinement)\n";
        return kExitParseError;
    }
    std::cout << rep.checks << " checks, " << rep.failures << " failures\n";
    return rep.failures ? kExitPropertyFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topology toolkit for simplicial complexes"};
    app.require_subcommand(1);

    std::string key, out, input, which, format = "json", file_a, file_b, suite, map_file;
    bool with_wu3 = false, with_wubetti = false, topo_count = false;
    std::size_t limit = 1000000;
    std::uint64_t seed = 7;
    int max_refine = 2, edge_a = -1, edge_b = -1;

    auto* gen = app.add_subcommand("gen", "write a named complex as facet-list JSON");
    gen->add_option("key", key)->required();
    gen->add_option("-o,--out", out);

    auto* report = app.add_subcommand("report", "invariant report for a complex");
    report->add_option("input", input, "registry key or JSON file")->required();
    report->add_flag("--wu3", with_wu3);
    report->add_flag("--wubetti", with_wubetti);
    report->add_flag("--topology-count", topo_count);
    report->add_option("--limit", limit);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required();
    verify->add_option("--seed", seed);

    auto* homeo = app.add_subcommand("homeo", "bounded homeomorphism test");
    homeo->add_option("a", file_a)->required();
    homeo->add_option("b", file_b)->required();
    homeo->add_option("--max-refine", max_refine);

    auto* refine = app.add_subcommand("refine", "Barycentric or edge refinement");
    refine->add_option("input", input)->required();
    refine->add_option("-o,--out", out);
    refine->add_option("--edge-a", edge_a);
    refine->add_option("--edge-b", edge_b);

    auto* matrix = app.add_subcommand("matrix", "export L, g1/g2, s*, b*, d or hodge:k");
    matrix->add_option("input", input)->required();
    matrix->add_option("which", which)->required();
    matrix->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers");
    betti_cmd->add_option("input", input)->required();

    auto* wubetti_cmd = app.add_subcommand("wubetti", "interaction cohomology Betti numbers");
    wubetti_cmd->add_option("input", input)->required();

    auto* lefschetz = app.add_subcommand("lefschetz", "Lefschetz number of a vertex map");
    lefschetz->add_option("input", input)->required();
    lefschetz->add_option("map", map_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(key, out);
        if (report->parsed()) return cmd_report(input, with_wu3, with_wubetti, topo_count, limit);
        if (verify->parsed()) return cmd_verify(suite, seed);
        if (homeo->parsed()) return cmd_homeo(file_a, file_b, max_refine);
        if (refine->parsed()) return cmd_refine(input, out, edge_a, edge_b);
        if (matrix->parsed()) return cmd_matrix(input, which, format);
        if (betti_cmd->parsed()) return cmd_betti(input, false);
        if (wubetti_cmd->parsed()) return cmd_betti(input, true);
        if (lefschetz->parsed()) return cmd_lefschetz(input, map_file);
    } catch (const ft::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}
