#include "ft/registry.hpp"

#include <stdexcept>

namespace ft {

const std::vector<std::vector<VertexId>>& homology_sphere_facets() {
    static const std::vector<std::vector<VertexId>> facets = {
        {1, 2, 4, 9},    {1, 2, 4, 15},   {1, 2, 6, 14},   {1, 2, 6, 15},   {1, 2, 9, 14},
        {1, 3, 4, 12},   {1, 3, 4, 15},   {1, 3, 7, 10},   {1, 3, 7, 12},   {1, 3, 10, 15},
        {1, 4, 9, 12},   {1, 5, 6, 13},   {1, 5, 6, 14},   {1, 5, 8, 11},   {1, 5, 8, 13},
        {1, 5, 11, 14},  {1, 6, 13, 15},  {1, 7, 8, 10},   {1, 7, 8, 11},   {1, 7, 11, 12},
        {1, 8, 10, 13},  {1, 9, 11, 12},  {1, 9, 11, 14},  {1, 10, 13, 15}, {2, 3, 5, 10},
        {2, 3, 5, 11},   {2, 3, 7, 10},   {2, 3, 7, 13},   {2, 3, 11, 13},  {2, 4, 9, 13},
        {2, 4, 11, 13},  {2, 4, 11, 15},  {2, 5, 8, 11},   {2, 5, 8, 12},   {2, 5, 10, 12},
        {2, 6, 10, 12},  {2, 6, 10, 14},  {2, 6, 12, 15},  {2, 7, 9, 13},   {2, 7, 9, 14},
        {2, 7, 10, 14},  {2, 8, 11, 15},  {2, 8, 12, 15},  {3, 4, 5, 14},   {3, 4, 5, 15},
        {3, 4, 12, 14},  {3, 5, 10, 15},  {3, 5, 11, 14},  {3, 7, 12, 13},  {3, 11, 13, 14},
        {3, 12, 13, 14}, {4, 5, 6, 7},    {4, 5, 6, 14},   {4, 5, 7, 15},   {4, 6, 7, 11},
        {4, 6, 10, 11},  {4, 6, 10, 14},  {4, 7, 11, 15},  {4, 8, 9, 12},   {4, 8, 9, 13},
        {4, 8, 10, 13},  {4, 8, 10, 14},  {4, 8, 12, 14},  {4, 10, 11, 13}, {5, 6, 7, 13},
        {5, 7, 9, 13},   {5, 7, 9, 15},   {5, 8, 9, 12},   {5, 8, 9, 13},   {5, 9, 10, 12},
        {5, 9, 10, 15},  {6, 7, 11, 12},  {6, 7, 12, 13},  {6, 10, 11, 12}, {6, 12, 13, 15},
        {7, 8, 10, 14},  {7, 8, 11, 15},  {7, 8, 14, 15},  {7, 9, 14, 15},  {8, 12, 14, 15},
        {9, 10, 11, 12}, {9, 10, 11, 16}, {9, 10, 15, 16}, {9, 11, 14, 16}, {9, 14, 15, 16},
        {10, 11, 13, 16},{10, 13, 15, 16},{11, 13, 14, 16},{12, 13, 14, 15},{13, 14, 15, 16}};
    return facets;
}

namespace {

std::optional<int> parse_param(const std::string& key, const std::string& prefix) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    try {
        return std::stoi(key.substr(prefix.size()));
    } catch (...) {
        return std::nullopt;
    }
}

Graph fig1_graph() {
    std::vector<VertexId> vs{1, 2, 3, 4, 6, 8, 9, 10};
    std::vector<std::pair<VertexId, VertexId>> es{
        {1, 2}, {2, 3}, {3, 1}, {3, 4}, {3, 6}, {3, 8}, {8, 9}, {8, 10}};
    return Graph(vs, es);
}

Graph digital8_graph() {
    // two squares 1-2-3-4 and 3-5-6-4 glued along the edge {3,4}
    std::vector<VertexId> vs{1, 2, 3, 4, 5, 6};
    std::vector<std::pair<VertexId, VertexId>> es{
        {1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {5, 6}, {6, 4}};
    return Graph(vs, es);
}

Graph figure8_graph() {
    // two squares sharing the single vertex 0
    std::vector<VertexId> vs{0, 1, 2, 3, 4, 5, 6};
    std::vector<std::pair<VertexId, VertexId>> es{
        {0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}};
    return Graph(vs, es);
}

Graph cylinder_graph() {
    std::vector<VertexId> vs{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::pair<VertexId, VertexId>> es{
        {1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
        {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 4}, {4, 8}, {8, 1}};
    return Graph(vs, es);
}

} // namespace

std::optional<Graph> make_named_graph(const std::string& key) {
    if (auto n = parse_param(key, "cycle:")) return Graph::cycle(*n);
    if (auto n = parse_param(key, "complete:")) return Graph::complete(*n);
    if (auto n = parse_param(key, "star:")) return Graph::star(*n);
    if (auto n = parse_param(key, "path:")) return Graph::path(*n);
    if (auto n = parse_param(key, "wheel:")) return Graph::wheel(*n);
    if (key == "fig1") return fig1_graph();
    if (key == "figure8") return figure8_graph();
    if (key == "digital8") return digital8_graph();
    if (key == "cylinder") return cylinder_graph();
    if (key == "moebius") return Graph::cycle(7).complement();
    return std::nullopt;
}

std::optional<SimplicialComplex> make_named_complex(const std::string& key) {
    if (auto g = make_named_graph(key)) return whitney_complex(*g);
    const std::string susp = "suspension:";
    if (key.size() > susp.size() && key.compare(0, susp.size(), susp) == 0) {
        if (auto base = make_named_complex(key.substr(susp.size()))) return suspension(*base);
        return std::nullopt;
    }
    const std::string dsusp = "double-suspension:";
    if (key.size() > dsusp.size() && key.compare(0, dsusp.size(), dsusp) == 0) {
        if (auto base = make_named_complex(key.substr(dsusp.size())))
            return double_suspension(*base);
        return std::nullopt;
    }
    if (key == "onesphere") return whitney_complex(Graph::cycle(4));
    if (key == "octahedron" || key == "twosphere")
        return suspension(whitney_complex(Graph::cycle(4)));
    if (key == "threesphere")
        return double_suspension(whitney_complex(Graph::cycle(4)));
    if (key == "homology3sphere" || key == "homologysphere")
        return SimplicialComplex::closure(homology_sphere_facets());
    return std::nullopt;
}

std::vector<std::string> registry_keys() {
    return {"complete:2", "complete:3", "complete:4", "cycle:4",  "cycle:5",
            "cycle:6",    "star:3",     "star:4",     "path:5",   "wheel:4",
            "fig1",       "figure8",    "digital8",   "moebius",  "cylinder",
            "octahedron", "threesphere", "homology3sphere"};
}

std::vector<std::string> graph_registry_keys() {
    return {"complete:2", "complete:3", "complete:4", "cycle:4", "cycle:5",
            "cycle:6",    "star:3",     "star:4",     "path:5",  "wheel:4",
            "fig1",       "figure8",    "digital8",   "moebius", "cylinder"};
}

} // namespace ft
