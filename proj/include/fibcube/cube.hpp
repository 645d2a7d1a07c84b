#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibcube/graph_iso.hpp"
#include "fibcube/hypergraph.hpp"
#include "fibcube/vertex_set.hpp"

namespace fibcube {

inline constexpr std::size_t kDefaultBuildCap = 24;
inline constexpr std::size_t kDefaultAutomorphismCap = 4096;

/// Name of the environment variable that overrides the build cap.
inline constexpr const char* kBuildCapEnvVar = "FIBCUBE_CAP_VERTICES";

/// Explicit cube over a finite hypergraph: every independent subset is a
/// vertex, two vertices are adjacent iff their symmetric difference has
/// exactly one element. Vertices are listed in increasing mask order, which
/// makes every downstream output reproducible. Immutable after build.
struct CubeGraph {
    Hypergraph base;
    std::vector<IndepSet> verts;
    AdjacencyList adj;
    std::unordered_map<std::uint64_t, std::int32_t> mask_to_index;

    std::int32_t index_of(IndepSet s) const {
        auto it = mask_to_index.find(s.bits);
        return it == mask_to_index.end() ? -1 : it->second;
    }
    std::size_t edge_count() const;
};

/// Enumerates the independent sets of h by backtracking (a partial set is
/// pruned as soon as it contains an edge) and builds the one-bit-toggle
/// adjacency. vertex_cap = 0 means: use FIBCUBE_CAP_VERTICES if set, else the
/// default cap of 24. Throws CapError when h has more vertices than the cap,
/// or more than the 64 the set encoding can hold.
CubeGraph build_cube(const Hypergraph& h, std::size_t vertex_cap = 0);

/// Path on n vertices 0..n-1 with edges {i, i+1}. n counts vertices, so the
/// cube of path_hypergraph(n) has F_{n+2} vertices.
Hypergraph path_hypergraph(std::size_t n);

/// Cycle on n vertices with edges {i, (i+1) mod n}; requires n >= 3
/// (std::invalid_argument otherwise).
Hypergraph cycle_hypergraph(std::size_t n);

/// F_{n+2} with F_1 = F_2 = 1, by the recurrence. Independent regression
/// check against build_cube(path_hypergraph(n)); throws std::invalid_argument
/// once the value would overflow 64 bits (n > 91).
std::uint64_t cube_vertex_count(std::size_t n);

/// All graph automorphisms of the cube, deterministic order. Throws CapError
/// when the cube has more than vertex_cap vertices (0 = default 4096).
std::vector<Permutation> cube_automorphisms(const CubeGraph& c, std::size_t vertex_cap = 0);

/// Graphviz DOT with vertices labeled by their sets and each edge listed once
/// (lower index first). Byte-deterministic.
std::string export_dot(const CubeGraph& c);

}  // namespace fibcube
