#include "ft/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ft {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

SimplicialComplex complex_from_json_text(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::runtime_error("complex file: expected {\"facets\": [[...],...]}");
    std::vector<std::vector<VertexId>> sets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw std::runtime_error("complex file: facet is not an array");
        std::vector<VertexId> s;
        for (const auto& v : f) s.push_back(v.get<VertexId>());
        sets.push_back(std::move(s));
    }
    return SimplicialComplex::closure(sets);
}

SimplicialComplex load_complex(const std::string& path) {
    return complex_from_json_text(slurp(path));
}

std::string complex_to_json_text(const SimplicialComplex& g) {
    json facets = json::array();
    for (const auto& f : g.facets()) facets.push_back(f.vertices());
    json j;
    j["facets"] = facets;
    return j.dump();
}

void save_complex(const SimplicialComplex& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << complex_to_json_text(g) << "\n";
}

Graph graph_from_json_text(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::runtime_error("graph file: expected {\"vertices\": [...], \"edges\": [[a,b],...]}");
    std::vector<VertexId> vs;
    for (const auto& v : j["vertices"]) vs.push_back(v.get<VertexId>());
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("graph file: bad edge");
        es.push_back({e[0].get<VertexId>(), e[1].get<VertexId>()});
    }
    return Graph(vs, es);
}

Graph load_graph(const std::string& path) {
    return graph_from_json_text(slurp(path));
}

std::string graph_to_json_text(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json es = json::array();
    for (auto [a, b] : g.edges()) es.push_back(json::array({a, b}));
    j["edges"] = es;
    return j.dump();
}

std::map<VertexId, VertexId> load_vertex_map(const std::string& path) {
    json j = json::parse(slurp(path));
    if (!j.is_object() || !j.contains("map"))
        throw std::runtime_error("map file: expected {\"map\": ...}");
    std::map<VertexId, VertexId> f;
    const auto& m = j["map"];
    if (m.is_object()) {
        for (auto it = m.begin(); it != m.end(); ++it)
            f[static_cast<VertexId>(std::stol(it.key()))] = it.value().get<VertexId>();
    } else if (m.is_array()) {
        for (const auto& pr : m) {
            if (!pr.is_array() || pr.size() != 2) throw std::runtime_error("map file: bad pair");
            f[pr[0].get<VertexId>()] = pr[1].get<VertexId>();
        }
    } else {
        throw std::runtime_error("map file: map must be an object or pair list");
    }
    return f;
}

std::string matrix_to_csv(const IntMatrix& m) {
    std::ostringstream ss;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) ss << ",";
            ss << m.at(r, c);
        }
        ss << "\n";
    }
    return ss.str();
}

std::string matrix_to_json_text(const IntMatrix& m, const SimplicialComplex& legend) {
    json j;
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    json idx = json::array();
    for (size_t i = 0; i < legend.size(); ++i) idx.push_back(legend.simplex(static_cast<int>(i)).vertices());
    j["index"] = idx;
    return j.dump();
}

} // namespace ft
