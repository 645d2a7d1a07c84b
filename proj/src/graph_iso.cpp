#include "fibcube/graph_iso.hpp"

#include <algorithm>
#include <map>

namespace fibcube {

namespace {

using ColorVec = std::vector<std::int32_t>;

// One refinement round over both graphs jointly: the new color of a vertex is
// the rank of (old color, sorted neighbor colors) among all signatures seen in
// either graph. Joint ranking keeps colors comparable across the two graphs.
bool refine_round(const AdjacencyList& a, const AdjacencyList& b, ColorVec& ca, ColorVec& cb) {
    using Signature = std::vector<std::int32_t>;
    auto signatures = [](const AdjacencyList& g, const ColorVec& col) {
        std::vector<Signature> sig(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            sig[v].push_back(col[v]);
            for (std::int32_t u : g[v]) sig[v].push_back(col[static_cast<std::size_t>(u)]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        return sig;
    };
    auto sig_a = signatures(a, ca);
    auto sig_b = signatures(b, cb);

    std::map<Signature, std::int32_t> rank;
    for (const auto& s : sig_a) rank.emplace(s, 0);
    for (const auto& s : sig_b) rank.emplace(s, 0);
    std::int32_t next = 0;
    for (auto& [sig, r] : rank) r = next++;

    ColorVec na(a.size()), nb(b.size());
    for (std::size_t v = 0; v < a.size(); ++v) na[v] = rank[sig_a[v]];
    for (std::size_t v = 0; v < b.size(); ++v) nb[v] = rank[sig_b[v]];
    const bool changed = na != ca || nb != cb;
    ca = std::move(na);
    cb = std::move(nb);
    return changed;
}

bool same_color_histogram(const ColorVec& ca, const ColorVec& cb) {
    ColorVec sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

struct Matcher {
    const AdjacencyList& a;
    const AdjacencyList& b;
    const ColorVec& ca;
    const ColorVec& cb;
    std::size_t n;
    std::vector<char> adj_a, adj_b;  // flat n*n matrices
    Permutation map;
    std::vector<bool> used;
    std::vector<Permutation> found;

    Matcher(const AdjacencyList& a_, const AdjacencyList& b_, const ColorVec& ca_,
            const ColorVec& cb_)
        : a(a_), b(b_), ca(ca_), cb(cb_), n(a_.size()) {
        adj_a.assign(n * n, 0);
        adj_b.assign(n * n, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::int32_t u : a[v]) adj_a[v * n + static_cast<std::size_t>(u)] = 1;
        for (std::size_t v = 0; v < n; ++v)
            for (std::int32_t u : b[v]) adj_b[v * n + static_cast<std::size_t>(u)] = 1;
        map.assign(n, -1);
        used.assign(n, false);
    }

    void rec(std::size_t v) {
        if (v == n) {
            found.push_back(map);
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || ca[v] != cb[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u)
                if (adj_a[v * n + u] != adj_b[w * n + static_cast<std::size_t>(map[u])]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = static_cast<std::int32_t>(w);
            used[w] = true;
            rec(v + 1);
            used[w] = false;
        }
    }
};

}  // namespace

std::vector<Permutation> graph_isomorphisms(const AdjacencyList& a, const AdjacencyList& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return {};
    if (n == 0) return {Permutation{}};

    ColorVec ca(n), cb(n);
    for (std::size_t v = 0; v < n; ++v) ca[v] = static_cast<std::int32_t>(a[v].size());
    for (std::size_t v = 0; v < n; ++v) cb[v] = static_cast<std::int32_t>(b[v].size());
    if (!same_color_histogram(ca, cb)) return {};

    for (std::size_t round = 0; round < n; ++round) {
        if (!refine_round(a, b, ca, cb)) break;
        if (!same_color_histogram(ca, cb)) return {};
    }

    Matcher m(a, b, ca, cb);
    m.rec(0);
    return std::move(m.found);
}

}  // namespace fibcube
