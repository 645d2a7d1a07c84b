#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcube/factorize.hpp"
#include "fibcube/json_io.hpp"

using namespace fibcube;

TEST_CASE("hypergraph json: label order defines ids") {
    const auto lh = hypergraph_from_json_text(
        R"({ "vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]] })");
    CHECK(lh.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(lh.h.num_vertices() == 3);
    CHECK(lh.h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("hypergraph json: serialization sorts labels and edges") {
    Hypergraph h(3, {{2, 1}, {0, 1}});
    const OrderedJson j = hypergraph_to_json(h, {"z", "m", "a"});
    CHECK(j.dump() == R"({"vertices":["z","m","a"],"edges":[["a","m"],["m","z"]]})");
}

TEST_CASE("hypergraph json round trip") {
    const std::string text = R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})";
    const auto lh = hypergraph_from_json_text(text);
    CHECK(hypergraph_to_json(lh.h, lh.labels).dump() == text);
}

TEST_CASE("hypergraph json input errors") {
    CHECK_THROWS_AS(hypergraph_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json_text(R"({"vertices":["a","a"],"edges":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json_text(R"({"vertices":["a"],"edges":[["b"]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_from_json_text(R"({"edges":[]})"), std::invalid_argument);
}

TEST_CASE("cube json export") {
    const CubeGraph c = build_cube(Hypergraph(2, {{0, 1}}));
    CHECK(cube_to_json(c).dump() == R"({"vertices":[[],[0],[1]],"edges":[[0,1],[0,2]]})");
}

TEST_CASE("ball json records window and radius") {
    const HypergraphOracle o = infinite_path_oracle();
    const BallGraph ball = windowed_ball(o, ComponentVertex{BasePoint{}, {}}, 1, 2);
    const OrderedJson j = ball_to_json(ball);
    CHECK(j["window"] == 2);
    CHECK(j["radius"] == 1);
    CHECK(j["vertices"].size() == 3);
    const std::string dot = ball_to_dot(ball);
    CHECK(dot.find("window=2 radius=1") != std::string::npos);
}

TEST_CASE("iso map json round trip") {
    const CubeGraph c = build_cube(Hypergraph(2, {{0, 1}}));
    const CubeIso swap = CubeIso::checked(c, c, Permutation{0, 2, 1});
    const OrderedJson j = iso_map_to_json(swap);
    CHECK(iso_map_from_json(j, c, c) == swap.map);
}

TEST_CASE("iso map json rejects bad maps") {
    const CubeGraph c = build_cube(Hypergraph(2, {{0, 1}}));
    CHECK_THROWS_AS(iso_map_from_json(OrderedJson::parse(R"({"map":[[[],[]]]})"), c, c),
                    std::invalid_argument);  // not total
    CHECK_THROWS_AS(
        iso_map_from_json(
            OrderedJson::parse(R"({"map":[[[],[]],[[0],[0]],[[1],[0]]]})"), c, c),
        std::invalid_argument);  // target hit twice
    CHECK_THROWS_AS(
        iso_map_from_json(
            OrderedJson::parse(R"({"map":[[[],[]],[[0],[0,1]],[[1],[1]]]})"), c, c),
        std::invalid_argument);  // {0,1} is not a cube vertex
}

TEST_CASE("factorization json shape") {
    const Hypergraph h(2, {{0, 1}});
    const CubeGraph c = build_cube(h);
    const Factorization fz = factorize(CubeIso{&c, &c, Permutation{0, 2, 1}});
    const OrderedJson j = factorization_to_json(fz);
    CHECK(j["f"].dump() == "[[0,1],[1,0]]");
    CHECK(j["c"].dump() == "[]");
    CHECK(j["report"]["ok"] == true);
    CHECK(j["report"]["hypergraph_iso"] == true);
}
