#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibcube {

/// Vertex ids are dense integers in [0, num_vertices). Named vertices exist
/// only at the JSON boundary, where the label order defines the ids.
using VertexId = std::uint32_t;

/// An edge is a sorted, duplicate-free list of vertex ids.
using Edge = std::vector<VertexId>;

/// A bijection on vertex ids, map[v] = image of v.
using VertexMap = std::vector<VertexId>;

struct ValidationReport {
    std::vector<std::string> violations;  // empty iff the hypergraph is simple and in range
    std::vector<std::string> warnings;    // e.g. duplicate edges collapsed at construction
    bool valid() const { return violations.empty(); }
};

struct VertexClassification {
    std::vector<VertexId> isolated;      // vertices contained in no edge
    std::vector<VertexId> non_isolated;  // the rest; the two lists partition [0, n)
};

/// Finite hypergraph: a vertex count plus a family of edges. Edges are
/// canonicalized at construction (each edge sorted and deduplicated, the edge
/// list sorted lexicographically, exact duplicate edges collapsed). Invalid
/// data (short edges, out-of-range vertices) is kept so validate() can report
/// it; all other operations assume a validated simple hypergraph.
///
/// Immutable after construction; safe to share across threads.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t duplicate_edges_collapsed() const { return duplicates_collapsed_; }

    /// Indices into edges() of the edges containing v (ascending).
    const std::vector<std::size_t>& incident_edges(VertexId v) const;

    bool is_edge(const Edge& e) const;  // e must be sorted

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::size_t duplicates_collapsed_ = 0;
};

/// Checks the standing hypotheses: every edge has >= 2 vertices, no edge is a
/// subset of another, all vertices in range. Violations are data, not errors.
ValidationReport validate(const Hypergraph& h);

/// { u != v : some edge contains both u and v }, ascending. Throws
/// std::out_of_range for v outside [0, n).
std::vector<VertexId> neighbors(const Hypergraph& h, VertexId v);

/// { e \ {v} : e edge, v in e }, one entry per incident edge in edge order.
/// Empty iff v is isolated. Throws std::out_of_range for v out of range.
std::vector<Edge> tails(const Hypergraph& h, VertexId v);

/// True iff no edge is a subset of s. s need not be sorted; members are
/// range-checked (std::out_of_range).
bool is_independent(const Hypergraph& h, const std::vector<VertexId>& s);

VertexClassification classify_vertices(const Hypergraph& h);
bool has_isolated_vertex(const Hypergraph& h);

/// All bijections f with: e is an edge of s  <=>  f[e] is an edge of t.
/// Backtracking with degree and edge-size pruning; results are ordered
/// lexicographically in (f(0), f(1), ...). Empty when not isomorphic.
/// Automorphisms of g are hypergraph_isos(g, g).
std::vector<VertexMap> hypergraph_isos(const Hypergraph& s, const Hypergraph& t);

/// Seeded test-corpus generator. Samples candidate edges of sizes
/// 2..max_edge_size with the given density, keeps the minimal ones (so the
/// result is simple), and, when forbid_isolated is set, covers each remaining
/// isolated vertex with a random 2-edge. Deterministic for a fixed seed.
/// Throws std::invalid_argument when max_edge_size < 2.
Hypergraph random_hypergraph(std::size_t n, std::size_t max_edge_size, double density,
                             std::uint64_t seed, bool forbid_isolated);

/// "{0,2}" rendering shared by reports and DOT export.
std::string format_vertex_list(const std::vector<VertexId>& vs);

// Mask helpers for the bitset encodings used by the cube modules. Only valid
// for hypergraphs with at most 64 vertices (CapError otherwise).
std::vector<std::uint64_t> edge_masks(const Hypergraph& h);
std::uint64_t neighbor_mask(const Hypergraph& h, VertexId v);

inline bool is_independent_mask(const std::vector<std::uint64_t>& masks, std::uint64_t bits) {
    for (std::uint64_t e : masks)
        if ((e & ~bits) == 0) return false;
    return true;
}

}  // namespace fibcube
