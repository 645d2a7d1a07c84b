#include "fibcube/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibcube {

namespace {

std::string type_name(const OrderedJson& j) { return j.type_name(); }

const OrderedJson& require_array(const OrderedJson& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    const OrderedJson& v = j.at(key);
    if (!v.is_array())
        throw std::invalid_argument(std::string("key '") + key + "' must be an array, got " +
                                    type_name(v));
    return v;
}

}  // namespace

LabeledHypergraph hypergraph_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw std::invalid_argument("hypergraph document must be an object");
    LabeledHypergraph out;
    std::map<std::string, VertexId> ids;
    for (const OrderedJson& v : require_array(j, "vertices")) {
        if (!v.is_string()) throw std::invalid_argument("vertex labels must be strings");
        const std::string label = v.get<std::string>();
        if (!ids.emplace(label, static_cast<VertexId>(out.labels.size())).second)
            throw std::invalid_argument("duplicate vertex label '" + label + "'");
        out.labels.push_back(label);
    }
    std::vector<Edge> edges;
    for (const OrderedJson& e : require_array(j, "edges")) {
        if (!e.is_array()) throw std::invalid_argument("each edge must be an array of labels");
        Edge edge;
        for (const OrderedJson& v : e) {
            if (!v.is_string()) throw std::invalid_argument("edge members must be vertex labels");
            auto it = ids.find(v.get<std::string>());
            if (it == ids.end())
                throw std::invalid_argument("unknown vertex label '" + v.get<std::string>() +
                                            "' in edge");
            edge.push_back(it->second);
        }
        edges.push_back(std::move(edge));
    }
    out.h = Hypergraph(out.labels.size(), std::move(edges));
    return out;
}

LabeledHypergraph hypergraph_from_json_text(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return hypergraph_from_json(j);
}

OrderedJson hypergraph_to_json(const Hypergraph& h, const std::vector<std::string>& labels) {
    std::vector<std::string> names = labels;
    if (names.empty())
        for (std::size_t i = 0; i < h.num_vertices(); ++i) names.push_back("v" + std::to_string(i));
    if (names.size() != h.num_vertices())
        throw std::invalid_argument("label count does not match vertex count");

    std::vector<std::vector<std::string>> edges;
    for (const Edge& e : h.edges()) {
        std::vector<std::string> labeled;
        for (VertexId v : e) labeled.push_back(names.at(v));
        std::sort(labeled.begin(), labeled.end());
        edges.push_back(std::move(labeled));
    }
    std::sort(edges.begin(), edges.end());

    OrderedJson j;
    j["vertices"] = names;
    j["edges"] = edges;
    return j;
}

OrderedJson cube_to_json(const CubeGraph& c) {
    OrderedJson j;
    auto verts = OrderedJson::array();
    for (const IndepSet& s : c.verts) verts.push_back(s.members());
    j["vertices"] = std::move(verts);
    auto edges = OrderedJson::array();
    for (std::size_t i = 0; i < c.adj.size(); ++i)
        for (std::int32_t k : c.adj[i])
            if (static_cast<std::size_t>(k) > i)
                edges.push_back(OrderedJson::array({i, k}));
    j["edges"] = std::move(edges);
    return j;
}

OrderedJson ball_to_json(const BallGraph& b) {
    OrderedJson j;
    j["base"] = format_base_point(b.base);
    j["center_delta"] = b.center_delta;
    j["window"] = b.window;
    j["radius"] = b.radius;
    auto verts = OrderedJson::array();
    for (const VertexSet& d : b.deltas) verts.push_back(d.members());
    j["vertices"] = std::move(verts);
    auto edges = OrderedJson::array();
    for (std::size_t i = 0; i < b.adj.size(); ++i)
        for (std::int32_t k : b.adj[i])
            if (static_cast<std::size_t>(k) > i)
                edges.push_back(OrderedJson::array({i, k}));
    j["edges"] = std::move(edges);
    return j;
}

std::string ball_to_dot(const BallGraph& b) {
    std::ostringstream os;
    os << "// base=\"" << format_base_point(b.base) << "\" window=" << b.window
       << " radius=" << b.radius << "\n";
    os << "graph ball {\n";
    for (std::size_t i = 0; i < b.deltas.size(); ++i)
        os << "  v" << i << " [label=\"" << format_set(b.deltas[i]) << "\"];\n";
    for (std::size_t i = 0; i < b.adj.size(); ++i)
        for (std::int32_t k : b.adj[i])
            if (static_cast<std::size_t>(k) > i) os << "  v" << i << " -- v" << k << ";\n";
    os << "}\n";
    return os.str();
}

Permutation iso_map_from_json(const OrderedJson& j, const CubeGraph& source,
                              const CubeGraph& target) {
    const OrderedJson& pairs = require_array(j, "map");
    if (pairs.size() != source.verts.size())
        throw std::invalid_argument("map must list every source cube vertex exactly once");
    Permutation map(source.verts.size(), -1);
    std::vector<bool> assigned(source.verts.size(), false);
    std::vector<bool> hit(target.verts.size(), false);
    for (const OrderedJson& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("each map entry must be [sourceSet, targetSet]");
        auto read_set = [](const OrderedJson& arr) {
            if (!arr.is_array()) throw std::invalid_argument("vertex sets must be id arrays");
            VertexSet s;
            for (const OrderedJson& v : arr) {
                if (!v.is_number_unsigned())
                    throw std::invalid_argument("vertex sets must contain non-negative ids");
                s = s.with(v.get<VertexId>());
            }
            return s;
        };
        const std::int32_t si = source.index_of(read_set(pair[0]));
        const std::int32_t ti = target.index_of(read_set(pair[1]));
        if (si < 0)
            throw std::invalid_argument("map source set " + pair[0].dump() +
                                        " is not a cube vertex");
        if (ti < 0)
            throw std::invalid_argument("map target set " + pair[1].dump() +
                                        " is not a cube vertex");
        if (assigned[static_cast<std::size_t>(si)])
            throw std::invalid_argument("map assigns a source vertex twice");
        if (hit[static_cast<std::size_t>(ti)])
            throw std::invalid_argument("map hits a target vertex twice");
        assigned[static_cast<std::size_t>(si)] = true;
        hit[static_cast<std::size_t>(ti)] = true;
        map[static_cast<std::size_t>(si)] = ti;
    }
    return map;
}

OrderedJson iso_map_to_json(const CubeIso& iso) {
    OrderedJson j;
    auto pairs = OrderedJson::array();
    for (std::size_t i = 0; i < iso.map.size(); ++i)
        pairs.push_back(OrderedJson::array(
            {iso.source->verts[i].members(), iso.image(static_cast<std::int32_t>(i)).members()}));
    j["map"] = std::move(pairs);
    return j;
}

OrderedJson factorization_to_json(const Factorization& fz) {
    OrderedJson j;
    auto f = OrderedJson::array();
    for (VertexId v = 0; v < fz.f.size(); ++v) f.push_back(OrderedJson::array({v, fz.f[v]}));
    j["f"] = std::move(f);
    j["c"] = fz.c.members();
    OrderedJson report;
    report["ok"] = fz.report.ok();
    report["checked_vertices"] = fz.report.checked_vertices;
    report["checked_edges"] = fz.report.checked_edges;
    report["sampled"] = fz.report.sampled;
    report["f_bijective"] = fz.f_bijective;
    report["hypergraph_iso"] = fz.hypergraph_iso;
    report["failures"] = fz.report.failures;
    j["report"] = std::move(report);
    return j;
}

OrderedJson theorem_report_to_json(const TheoremReport& r) {
    OrderedJson j;
    j["cube_isos"] = r.cube_iso_count;
    j["hypergraph_isos"] = r.hyper_iso_count;
    j["isolated"] = OrderedJson::array({r.isolated_s, r.isolated_t});
    j["part1_equiv"] = r.part1_equiv;
    j["all_factor_ok"] = r.all_factor_ok;
    j["offsets_empty_applicable"] = r.offsets_empty_applicable;
    j["offsets_empty"] = r.offsets_empty;
    j["fc_to_g_injective"] = r.fc_to_g_injective;
    j["counts_rule"] = r.counts_rule;
    j["counts_match"] = r.counts_match;
    j["ok"] = r.ok();
    j["failures"] = r.failures;
    return j;
}

}  // namespace fibcube
