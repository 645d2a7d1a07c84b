#include "fibcube/lazy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fibcube/errors.hpp"

namespace fibcube {

HypergraphOracle infinite_path_oracle() {
    HypergraphOracle o;
    o.edges_containing = [](VertexId v) {
        std::vector<Edge> out;
        if (v > 0) out.push_back({v - 1, v});
        out.push_back({v, v + 1});
        return out;
    };
    o.vertices_below = [](VertexId limit) {
        std::vector<VertexId> out(limit);
        std::iota(out.begin(), out.end(), VertexId{0});
        return out;
    };
    return o;
}

bool BasePoint::contains(VertexId v) const {
    const VertexId w = width();
    if (v < w) return std::binary_search(prefix.begin(), prefix.end(), v);
    if (pattern.empty()) return false;
    return pattern[(v - w) % pattern.size()] != 0;
}

bool ComponentVertex::contains(VertexId v) const {
    const bool in_base = base.contains(v);
    const bool in_delta = std::binary_search(delta.begin(), delta.end(), v);
    return in_base != in_delta;
}

BasePoint parse_base_point(const std::string& text) {
    BasePoint b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        pos = end + 1;
        if (part.empty()) continue;
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("base point: expected key=value, got '" + part + "'");
        const std::string key = part.substr(0, eq);
        const std::string value = part.substr(eq + 1);
        if (key == "prefix") {
            std::istringstream is(value);
            std::string token;
            while (std::getline(is, token, ',')) {
                if (token.empty())
                    throw std::invalid_argument("base point: empty id in prefix list");
                std::size_t consumed = 0;
                unsigned long id = std::stoul(token, &consumed);
                if (consumed != token.size())
                    throw std::invalid_argument("base point: bad id '" + token + "'");
                b.prefix.push_back(static_cast<VertexId>(id));
            }
            std::sort(b.prefix.begin(), b.prefix.end());
            b.prefix.erase(std::unique(b.prefix.begin(), b.prefix.end()), b.prefix.end());
        } else if (key == "pattern") {
            for (char ch : value) {
                if (ch != '0' && ch != '1')
                    throw std::invalid_argument("base point: pattern must be a bit string");
                b.pattern.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
        } else {
            throw std::invalid_argument("base point: unknown key '" + key + "'");
        }
    }
    return b;
}

std::string format_base_point(const BasePoint& b) {
    std::ostringstream os;
    if (!b.prefix.empty()) {
        os << "prefix=";
        for (std::size_t i = 0; i < b.prefix.size(); ++i) {
            if (i) os << ',';
            os << b.prefix[i];
        }
    }
    if (!b.pattern.empty()) {
        if (!b.prefix.empty()) os << ';';
        os << "pattern=";
        for (std::uint8_t bit : b.pattern) os << (bit ? '1' : '0');
    }
    return os.str();
}

bool base_point_independent(const HypergraphOracle& o, const BasePoint& b,
                            std::size_t check_horizon) {
    const std::size_t needed = b.width() + 2 * b.pattern.size();
    if (check_horizon < needed)
        throw std::invalid_argument("check_horizon " + std::to_string(check_horizon) +
                                    " below required " + std::to_string(needed));
    for (VertexId v : o.vertices_below(static_cast<VertexId>(check_horizon))) {
        if (!b.contains(v)) continue;
        for (const Edge& e : o.edges_containing(v)) {
            bool contained = true;
            for (VertexId u : e)
                if (!b.contains(u)) {
                    contained = false;
                    break;
                }
            if (contained) return false;
        }
    }
    return true;
}

namespace {

void require_delta_in_window(const ComponentVertex& x, std::size_t window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    for (VertexId v : x.delta)
        if (v >= window)
            throw std::invalid_argument("delta vertex " + std::to_string(v) +
                                        " outside window [0, " + std::to_string(window) + ")");
}

std::vector<VertexId> toggled_delta(const std::vector<VertexId>& delta, VertexId v) {
    std::vector<VertexId> out;
    bool inserted = false;
    for (VertexId u : delta) {
        if (u == v) {
            inserted = true;  // removal
            continue;
        }
        if (!inserted && u > v) {
            out.push_back(v);
            inserted = true;
        }
        out.push_back(u);
    }
    if (!inserted) out.push_back(v);
    return out;
}

// y = x toggled at v. A removal stays independent; an addition can only
// complete an edge through v, so those are the edges to test.
bool toggle_independent(const HypergraphOracle& o, const ComponentVertex& x, VertexId v) {
    if (x.contains(v)) return true;
    for (const Edge& e : o.edges_containing(v)) {
        bool contained = true;
        for (VertexId u : e)
            if (u != v && !x.contains(u)) {
                contained = false;
                break;
            }
        if (contained) return false;
    }
    return true;
}

}  // namespace

std::vector<ComponentVertex> windowed_neighbors(const HypergraphOracle& o,
                                                const ComponentVertex& x, std::size_t window) {
    require_delta_in_window(x, window);
    std::vector<ComponentVertex> out;
    for (VertexId v : o.vertices_below(static_cast<VertexId>(window))) {
        if (!toggle_independent(o, x, v)) continue;
        out.push_back(ComponentVertex{x.base, toggled_delta(x.delta, v)});
    }
    return out;
}

std::size_t BallGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.size();
    return twice / 2;
}

BallGraph windowed_ball(const HypergraphOracle& o, const ComponentVertex& x, std::size_t radius,
                        std::size_t window) {
    require_delta_in_window(x, window);
    if (window > 64)
        throw CapError("windowed_ball: window " + std::to_string(window) +
                       " exceeds the 64-bit delta encoding");

    // BFS over deltas from the center; adjacency rebuilt afterwards on the
    // sorted vertex list so the output order is mask order, not visit order.
    std::unordered_map<std::uint64_t, std::size_t> dist;
    std::deque<std::uint64_t> queue;
    dist.emplace(0, 0);
    queue.push_back(0);
    while (!queue.empty()) {
        const std::uint64_t d = queue.front();
        queue.pop_front();
        const std::size_t level = dist[d];
        if (level == radius) continue;
        ComponentVertex cur{x.base, {}};
        cur.delta = (VertexSet{d} ^ VertexSet::from_vertices(x.delta)).members();
        for (const ComponentVertex& nb : windowed_neighbors(o, cur, window)) {
            const std::uint64_t nd =
                (VertexSet::from_vertices(nb.delta) ^ VertexSet::from_vertices(x.delta)).bits;
            if (dist.emplace(nd, level + 1).second) queue.push_back(nd);
        }
    }

    BallGraph ball;
    ball.base = x.base;
    ball.center_delta = x.delta;
    ball.window = window;
    ball.radius = radius;
    for (const auto& [d, level] : dist) ball.deltas.push_back(VertexSet{d});
    std::sort(ball.deltas.begin(), ball.deltas.end());

    std::unordered_map<std::uint64_t, std::int32_t> index;
    for (std::size_t i = 0; i < ball.deltas.size(); ++i)
        index.emplace(ball.deltas[i].bits, static_cast<std::int32_t>(i));
    ball.adj.assign(ball.deltas.size(), {});
    for (std::size_t i = 0; i < ball.deltas.size(); ++i) {
        for (std::size_t v = 0; v < window; ++v) {
            const std::uint64_t toggled = ball.deltas[i].bits ^ (std::uint64_t{1} << v);
            auto it = index.find(toggled);
            if (it != index.end()) ball.adj[i].push_back(it->second);
        }
        std::sort(ball.adj[i].begin(), ball.adj[i].end());
    }
    return ball;
}

ComponentIdentity same_component(const BasePoint& a, const BasePoint& b, std::size_t horizon) {
    const std::size_t align = std::max(a.width(), b.width());
    const std::size_t pa = a.pattern.empty() ? 1 : a.pattern.size();
    const std::size_t pb = b.pattern.empty() ? 1 : b.pattern.size();
    const std::size_t period = std::lcm(pa, pb);
    if (horizon < align + period) return ComponentIdentity::UnknownAtHorizon;
    for (std::size_t v = align; v < align + period; ++v)
        if (a.contains(static_cast<VertexId>(v)) != b.contains(static_cast<VertexId>(v)))
            return ComponentIdentity::Different;  // the mismatch recurs every period
    return ComponentIdentity::Same;
}

}  // namespace fibcube
