#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ft/complex.hpp"
#include "ft/graph.hpp"

namespace ft {

/// Builds a named complex. Keys: "cycle:n", "complete:n", "star:n" (n rays),
/// "path:n", "wheel:n", "octahedron", "homology3sphere", "fig1", "figure8",
/// "digital8", "moebius", "cylinder", plus the aliases "onesphere",
/// "twosphere", "threesphere". Returns nothing for unknown keys.
std::optional<SimplicialComplex> make_named_complex(const std::string& key);

/// The generating graph for graph-backed registry entries; empty for
/// complex-level constructions (the spheres from joins, homology3sphere).
std::optional<Graph> make_named_graph(const std::string& key);

/// Registry keys used by verification suites, in a fixed order.
std::vector<std::string> registry_keys();

/// Subset of registry_keys() with a generating graph.
std::vector<std::string> graph_registry_keys();

/// The 90 tetrahedral facets of the 16-vertex homology 3-sphere.
const std::vector<std::vector<VertexId>>& homology_sphere_facets();

} // namespace ft
