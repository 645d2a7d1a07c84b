#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fibcube/cube.hpp"
#include "fibcube/factorize.hpp"
#include "fibcube/hypergraph.hpp"
#include "fibcube/lazy.hpp"

namespace fibcube {

using OrderedJson = nlohmann::ordered_json;

/// Hypergraph plus the vertex labels that defined its ids. Labels live only
/// at this boundary; the core works on dense ids.
struct LabeledHypergraph {
    Hypergraph h;
    std::vector<std::string> labels;  // labels[id] = name; index order defined the ids
};

/// { "vertices": ["a","b"], "edges": [["a","b"]] } — the vertex order defines
/// ids 0..n-1. Throws std::invalid_argument on malformed documents, duplicate
/// labels, or unknown labels in edges.
LabeledHypergraph hypergraph_from_json(const OrderedJson& j);
LabeledHypergraph hypergraph_from_json_text(const std::string& text);

/// Serialization contract: labels sorted within each edge, edges sorted
/// lexicographically. Default labels are "v0".."v{n-1}".
OrderedJson hypergraph_to_json(const Hypergraph& h, const std::vector<std::string>& labels = {});

/// { "vertices": [[0,2],...], "edges": [[i,j],...] } with i < j, rows sorted.
OrderedJson cube_to_json(const CubeGraph& c);

/// Ball export carries its window and radius in the header fields.
OrderedJson ball_to_json(const BallGraph& b);
std::string ball_to_dot(const BallGraph& b);

/// { "map": [[sourceVertexSet, targetVertexSet], ...] }, sets as sorted id
/// arrays. Resolves the sets against the two cubes; std::invalid_argument on
/// unknown sets or a non-bijective map.
Permutation iso_map_from_json(const OrderedJson& j, const CubeGraph& source,
                              const CubeGraph& target);
OrderedJson iso_map_to_json(const CubeIso& iso);

/// { "f": [[v, fv], ...], "c": [ids], "report": {...} }
OrderedJson factorization_to_json(const Factorization& fz);

OrderedJson theorem_report_to_json(const TheoremReport& r);

}  // namespace fibcube
