#pragma once

#include <cstdint>
#include <vector>

namespace fibcube {

/// Sorted neighbor indices per vertex.
using AdjacencyList = std::vector<std::vector<std::int32_t>>;

/// A bijection on vertex indices, perm[i] = image of i.
using Permutation = std::vector<std::int32_t>;

/// All isomorphisms from graph a to graph b: iterated degree-refinement
/// coloring, then backtracking restricted to matching color classes.
/// Results are ordered lexicographically in (perm[0], perm[1], ...).
/// Empty when the graphs are not isomorphic.
std::vector<Permutation> graph_isomorphisms(const AdjacencyList& a, const AdjacencyList& b);

}  // namespace fibcube
