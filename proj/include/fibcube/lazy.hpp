#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibcube/graph_iso.hpp"
#include "fibcube/hypergraph.hpp"
#include "fibcube/vertex_set.hpp"

namespace fibcube {

/// Oracle view of a (possibly infinite) locally finite hypergraph. Both
/// functions must be pure: answers may be cached and are assumed consistent
/// across calls.
struct HypergraphOracle {
    /// Finite list of the edges containing v, deterministic order.
    std::function<std::vector<Edge>(VertexId)> edges_containing;
    /// All vertex ids below the limit, increasing.
    std::function<std::vector<VertexId>(VertexId limit)> vertices_below;
};

/// Vertices 0,1,2,... with edges {v, v+1}.
HypergraphOracle infinite_path_oracle();

/// Finite description of an eventually periodic vertex subset: an explicit
/// prefix plus a bit pattern repeated on every position >= width(). An empty
/// pattern means all zeros from width() on.
struct BasePoint {
    std::vector<VertexId> prefix;       // sorted ascending, unique
    std::vector<std::uint8_t> pattern;  // 0/1 bits

    /// First position governed by the pattern: max(prefix)+1, or 0 if empty.
    VertexId width() const { return prefix.empty() ? 0 : prefix.back() + 1; }
    bool contains(VertexId v) const;

    bool operator==(const BasePoint&) const = default;
};

/// CLI syntax "prefix=0,2;pattern=10" (both parts optional, "" = empty set).
/// Throws std::invalid_argument on malformed input.
BasePoint parse_base_point(const std::string& text);
std::string format_base_point(const BasePoint& b);

/// A vertex of the component of base: base XOR delta, with delta finite.
/// Two vertices over the same base are equal iff their deltas are equal.
struct ComponentVertex {
    BasePoint base;
    std::vector<VertexId> delta;  // sorted ascending, unique

    bool contains(VertexId v) const;
    bool operator==(const ComponentVertex&) const = default;
};

/// Verifies that no edge touching [0, check_horizon) is contained in the set
/// b describes. Requires check_horizon >= width + 2 * pattern length
/// (std::invalid_argument below that); for the infinite path and eventually
/// periodic sets this horizon is sufficient, since adjacent-pair violations
/// repeat with the pattern.
bool base_point_independent(const HypergraphOracle& o, const BasePoint& b,
                            std::size_t check_horizon);

/// All y with |x XOR y| = 1 where the toggled vertex lies inside [0, window)
/// and y is independent (checked through edges_containing of the toggled
/// vertex). Ordered by toggled vertex. Every vertex of the infinite cube has
/// infinitely many neighbors, so enumeration is window-relative by design.
/// Requires window >= 1 and x's delta inside the window (std::invalid_argument).
std::vector<ComponentVertex> windowed_neighbors(const HypergraphOracle& o,
                                                const ComponentVertex& x, std::size_t window);

/// BFS closure of windowed_neighbors: the subgraph induced by vertices within
/// graph distance <= radius of the center, toggles restricted to the window.
/// Vertices are recorded as deltas from the center, in increasing mask order.
struct BallGraph {
    BasePoint base;          // base point of the explored component
    std::vector<VertexId> center_delta;
    std::size_t window = 0;  // every output is labeled with its window
    std::size_t radius = 0;
    std::vector<VertexSet> deltas;  // deltas from the center, increasing mask order
    AdjacencyList adj;

    std::size_t edge_count() const;
};

/// Requires window <= 64 (CapError) on top of windowed_neighbors' preconditions.
BallGraph windowed_ball(const HypergraphOracle& o, const ComponentVertex& x,
                        std::size_t radius, std::size_t window);

/// Whether two base points describe vertices of the same component, i.e.
/// whether their symmetric difference is finite. Decidable exactly once the
/// horizon covers both widths plus one aligned period of both patterns;
/// reported unknown below that.
enum class ComponentIdentity { Same, Different, UnknownAtHorizon };
ComponentIdentity same_component(const BasePoint& a, const BasePoint& b, std::size_t horizon);

/// Lazy view of the component of `base`, windowed to [0, window).
struct ComponentHandle {
    const HypergraphOracle* oracle = nullptr;
    BasePoint base;
    std::size_t window = 0;
};

}  // namespace fibcube
