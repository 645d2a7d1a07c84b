#include "fibcube/cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

std::size_t resolve_build_cap(std::size_t explicit_cap) {
    if (explicit_cap != 0) return explicit_cap;
    if (const char* env = std::getenv(kBuildCapEnvVar)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBuildCap;
}

struct IndepEnumerator {
    // Edges grouped by their minimum vertex; vertices are decided from high
    // ids down, so an edge is fully decided when its minimum is added.
    std::vector<std::vector<std::uint64_t>> edges_by_min;
    std::vector<IndepSet> out;

    void rec(std::size_t next, std::uint64_t mask) {
        if (next == 0) {
            out.push_back(IndepSet{mask});
            return;
        }
        const std::size_t v = next - 1;
        rec(v, mask);  // bit v stays 0 first: emits masks in increasing order
        const std::uint64_t with_v = mask | (std::uint64_t{1} << v);
        for (std::uint64_t e : edges_by_min[v])
            if ((e & ~with_v) == 0) return;
        rec(v, with_v);
    }
};

}  // namespace

std::size_t CubeGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.size();
    return twice / 2;
}

CubeGraph build_cube(const Hypergraph& h, std::size_t vertex_cap) {
    const std::size_t cap = resolve_build_cap(vertex_cap);
    const std::size_t n = h.num_vertices();
    if (n > cap)
        throw CapError("build_cube: " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(cap));
    if (n > 64)
        throw CapError("build_cube: bitset encoding caps the vertex universe at 64, got " +
                       std::to_string(n));

    IndepEnumerator en;
    en.edges_by_min.assign(n, {});
    for (const Edge& e : h.edges()) {
        if (e.empty()) continue;
        std::uint64_t m = 0;
        for (VertexId v : e) {
            if (v >= n) throw std::invalid_argument("build_cube: edge vertex out of range");
            m |= std::uint64_t{1} << v;
        }
        en.edges_by_min[e.front()].push_back(m);
    }
    en.rec(n, 0);

    CubeGraph c;
    c.base = h;
    c.verts = std::move(en.out);
    c.mask_to_index.reserve(c.verts.size() * 2);
    for (std::size_t i = 0; i < c.verts.size(); ++i)
        c.mask_to_index.emplace(c.verts[i].bits, static_cast<std::int32_t>(i));

    c.adj.assign(c.verts.size(), {});
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t toggled = c.verts[i].bits ^ (std::uint64_t{1} << v);
            auto it = c.mask_to_index.find(toggled);
            if (it != c.mask_to_index.end()) c.adj[i].push_back(it->second);
        }
        std::sort(c.adj[i].begin(), c.adj[i].end());
    }
    return c;
}

Hypergraph path_hypergraph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    return Hypergraph(n, std::move(edges));
}

Hypergraph cycle_hypergraph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_hypergraph requires n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        VertexId a = static_cast<VertexId>(i);
        VertexId b = static_cast<VertexId>((i + 1) % n);
        edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    return Hypergraph(n, std::move(edges));
}

std::uint64_t cube_vertex_count(std::size_t n) {
    if (n > 91) throw std::invalid_argument("cube_vertex_count overflows past n = 91");
    std::uint64_t a = 1, b = 1;  // F_1, F_2
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return b;  // F_{n+2}
}

std::vector<Permutation> cube_automorphisms(const CubeGraph& c, std::size_t vertex_cap) {
    const std::size_t cap = vertex_cap != 0 ? vertex_cap : kDefaultAutomorphismCap;
    if (c.verts.size() > cap)
        throw CapError("cube_automorphisms: " + std::to_string(c.verts.size()) +
                       " cube vertices exceeds the cap of " + std::to_string(cap));
    return graph_isomorphisms(c.adj, c.adj);
}

std::string export_dot(const CubeGraph& c) {
    std::ostringstream os;
    os << "graph cube {\n";
    for (std::size_t i = 0; i < c.verts.size(); ++i)
        os << "  v" << i << " [label=\"" << format_set(c.verts[i]) << "\"];\n";
    for (std::size_t i = 0; i < c.adj.size(); ++i)
        for (std::int32_t j : c.adj[i])
            if (static_cast<std::size_t>(j) > i) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fibcube
