#include "fibcube/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fibcube/errors.hpp"

namespace fibcube {

namespace {

void check_vertex(const Hypergraph& h, VertexId v) {
    if (v >= h.num_vertices()) {
        std::ostringstream os;
        os << "vertex " << v << " out of range [0, " << h.num_vertices() << ")";
        throw std::out_of_range(os.str());
    }
}

// a subset-of b, both sorted
bool subset_of(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Uniform double in [0, 1), built from raw engine words so the stream is
// identical on every platform.
double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices) {
    for (Edge& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::sort(edges.begin(), edges.end());
    const std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    duplicates_collapsed_ = before - edges.size();
    edges_ = std::move(edges);

    incident_.assign(num_vertices_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (VertexId v : edges_[i])
            if (v < num_vertices_) incident_[v].push_back(i);
}

const std::vector<std::size_t>& Hypergraph::incident_edges(VertexId v) const {
    check_vertex(*this, v);
    return incident_[v];
}

bool Hypergraph::is_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

ValidationReport validate(const Hypergraph& h) {
    ValidationReport report;
    const auto& edges = h.edges();
    for (const Edge& e : edges) {
        if (e.size() < 2)
            report.violations.push_back("edge " + format_vertex_list(e) + " has size < 2");
        for (VertexId v : e)
            if (v >= h.num_vertices()) {
                std::ostringstream os;
                os << "edge " << format_vertex_list(e) << " contains out-of-range vertex " << v;
                report.violations.push_back(os.str());
            }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && subset_of(edges[i], edges[j]))
                report.violations.push_back("edge " + format_vertex_list(edges[i]) +
                                            " is a subset of edge " + format_vertex_list(edges[j]));
    if (h.duplicate_edges_collapsed() > 0) {
        std::ostringstream os;
        os << h.duplicate_edges_collapsed() << " duplicate edge(s) collapsed at construction";
        report.warnings.push_back(os.str());
    }
    return report;
}

std::vector<VertexId> neighbors(const Hypergraph& h, VertexId v) {
    check_vertex(h, v);
    std::vector<VertexId> out;
    for (std::size_t ei : h.incident_edges(v))
        for (VertexId u : h.edges()[ei])
            if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> tails(const Hypergraph& h, VertexId v) {
    check_vertex(h, v);
    std::vector<Edge> out;
    for (std::size_t ei : h.incident_edges(v)) {
        Edge t;
        for (VertexId u : h.edges()[ei])
            if (u != v) t.push_back(u);
        out.push_back(std::move(t));
    }
    return out;
}

bool is_independent(const Hypergraph& h, const std::vector<VertexId>& s) {
    Edge sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) check_vertex(h, v);
    for (const Edge& e : h.edges())
        if (subset_of(e, sorted)) return false;
    return true;
}

VertexClassification classify_vertices(const Hypergraph& h) {
    VertexClassification c;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (h.incident_edges(v).empty())
            c.isolated.push_back(v);
        else
            c.non_isolated.push_back(v);
    }
    return c;
}

bool has_isolated_vertex(const Hypergraph& h) {
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (h.incident_edges(v).empty()) return true;
    return false;
}

namespace {

// Per-vertex refinement signature: sorted multiset of incident edge sizes.
std::vector<std::size_t> vertex_signature(const Hypergraph& h, VertexId v) {
    std::vector<std::size_t> sig;
    for (std::size_t ei : h.incident_edges(v)) sig.push_back(h.edges()[ei].size());
    std::sort(sig.begin(), sig.end());
    return sig;
}

struct IsoSearch {
    const Hypergraph& s;
    const Hypergraph& t;
    std::vector<std::vector<std::size_t>> sig_s, sig_t;
    // Edges of s grouped by their maximum vertex: fully mapped exactly when
    // that vertex gets assigned.
    std::vector<std::vector<std::size_t>> edges_by_max;
    VertexMap map;
    std::vector<bool> used;
    std::vector<VertexMap> found;

    explicit IsoSearch(const Hypergraph& s_, const Hypergraph& t_) : s(s_), t(t_) {
        const std::size_t n = s.num_vertices();
        for (VertexId v = 0; v < n; ++v) sig_s.push_back(vertex_signature(s, v));
        for (VertexId v = 0; v < n; ++v) sig_t.push_back(vertex_signature(t, v));
        edges_by_max.assign(n, {});
        for (std::size_t ei = 0; ei < s.edges().size(); ++ei) {
            const Edge& e = s.edges()[ei];
            if (!e.empty() && e.back() < n) edges_by_max[e.back()].push_back(ei);
        }
        map.assign(n, 0);
        used.assign(n, false);
    }

    bool extension_ok(VertexId v) const {
        for (std::size_t ei : edges_by_max[v]) {
            Edge image;
            for (VertexId u : s.edges()[ei]) image.push_back(map[u]);
            std::sort(image.begin(), image.end());
            if (!t.is_edge(image)) return false;
        }
        return true;
    }

    void rec(VertexId v) {
        const std::size_t n = s.num_vertices();
        if (v == n) {
            found.push_back(map);
            return;
        }
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || sig_s[v] != sig_t[w]) continue;
            map[v] = w;
            used[w] = true;
            if (extension_ok(v)) rec(v + 1);
            used[w] = false;
        }
    }
};

}  // namespace

std::vector<VertexMap> hypergraph_isos(const Hypergraph& s, const Hypergraph& t) {
    if (s.num_vertices() != t.num_vertices()) return {};
    if (s.edges().size() != t.edges().size()) return {};
    auto size_multiset = [](const Hypergraph& h) {
        std::vector<std::size_t> z;
        for (const Edge& e : h.edges()) z.push_back(e.size());
        std::sort(z.begin(), z.end());
        return z;
    };
    if (size_multiset(s) != size_multiset(t)) return {};

    IsoSearch search(s, t);
    search.rec(0);
    return std::move(search.found);
}

Hypergraph random_hypergraph(std::size_t n, std::size_t max_edge_size, double density,
                             std::uint64_t seed, bool forbid_isolated) {
    if (max_edge_size < 2) throw std::invalid_argument("max_edge_size must be >= 2");
    std::mt19937_64 rng(seed);

    // Candidate edges in (size, lexicographic) order so the draw sequence is
    // a function of (n, max_edge_size) alone.
    std::vector<Edge> chosen;
    const std::size_t top = std::min(max_edge_size, n);
    for (std::size_t k = 2; k <= top; ++k) {
        std::vector<VertexId> combo(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<VertexId>(i);
        while (true) {
            if (next_double(rng) < density) chosen.push_back(combo);
            // next k-combination of [0, n)
            std::size_t i = k;
            while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }

    // Keep the minimal edges: dropping supersets enforces simplicity.
    std::vector<Edge> minimal;
    for (const Edge& e : chosen) {
        bool has_proper_subset = false;
        for (const Edge& f : chosen)
            if (f != e && subset_of(f, e)) {
                has_proper_subset = true;
                break;
            }
        if (!has_proper_subset) minimal.push_back(e);
    }

    if (forbid_isolated && n >= 2) {
        std::vector<bool> covered(n, false);
        for (const Edge& e : minimal)
            for (VertexId v : e) covered[v] = true;
        for (VertexId v = 0; v < n; ++v) {
            if (covered[v]) continue;
            std::size_t pick = next_index(rng, n - 1);
            VertexId u = static_cast<VertexId>(pick >= v ? pick + 1 : pick);
            minimal.push_back(u < v ? Edge{u, v} : Edge{v, u});
            covered[v] = covered[u] = true;
        }
    }

    return Hypergraph(n, std::move(minimal));
}

std::string format_vertex_list(const std::vector<VertexId>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
    if (h.num_vertices() > 64)
        throw CapError("bitset encoding supports at most 64 vertices, hypergraph has " +
                       std::to_string(h.num_vertices()));
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edges().size());
    for (const Edge& e : h.edges()) {
        std::uint64_t m = 0;
        for (VertexId v : e) m |= std::uint64_t{1} << v;
        masks.push_back(m);
    }
    return masks;
}

std::uint64_t neighbor_mask(const Hypergraph& h, VertexId v) {
    if (h.num_vertices() > 64)
        throw CapError("bitset encoding supports at most 64 vertices, hypergraph has " +
                       std::to_string(h.num_vertices()));
    std::uint64_t m = 0;
    for (VertexId u : neighbors(h, v)) m |= std::uint64_t{1} << u;
    return m;
}

}  // namespace fibcube
