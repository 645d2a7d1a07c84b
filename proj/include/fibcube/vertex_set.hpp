#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fibcube/hypergraph.hpp"

namespace fibcube {

/// Set of vertex ids packed into a 64-bit mask (bit v = vertex v). This is
/// the cube-vertex encoding; the 64-bit ceiling is enforced wherever sets are
/// built from wider universes.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet of(std::initializer_list<VertexId> vs) {
        VertexSet s;
        for (VertexId v : vs) s.bits |= bit(v);
        return s;
    }
    static VertexSet from_vertices(const std::vector<VertexId>& vs) {
        VertexSet s;
        for (VertexId v : vs) s.bits |= bit(v);
        return s;
    }

    static std::uint64_t bit(VertexId v);  // throws CapError for v >= 64

    bool contains(VertexId v) const { return v < 64 && ((bits >> v) & 1u); }
    bool empty() const { return bits == 0; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }

    VertexSet with(VertexId v) const { return VertexSet{bits | bit(v)}; }
    VertexSet without(VertexId v) const { return VertexSet{bits & ~bit(v)}; }
    VertexSet toggled(VertexId v) const { return VertexSet{bits ^ bit(v)}; }

    std::vector<VertexId> members() const;

    friend VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet{a.bits ^ b.bits}; }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }

    auto operator<=>(const VertexSet&) const = default;
};

/// Cube vertices are VertexSets whose encoded set is independent in the
/// owning hypergraph; the alias marks the places that maintain the invariant.
using IndepSet = VertexSet;

std::string format_set(VertexSet s);  // "{}", "{0,2}"

}  // namespace fibcube
