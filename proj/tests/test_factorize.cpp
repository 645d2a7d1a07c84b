#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fibcube/cube.hpp"
#include "fibcube/errors.hpp"
#include "fibcube/factorize.hpp"

using namespace fibcube;

namespace {

Permutation identity_map(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::int32_t>(i);
    return p;
}

}  // namespace

TEST_CASE("basis pairs on fixtures") {
    const Hypergraph path3 = path_hypergraph(3);
    SUBCASE("removing the middle vertex clears its neighbors") {
        const BasisPair bp = basis_pair(path3, IndepSet::of({0, 2}), 1);
        CHECK(bp.x == IndepSet{});
        CHECK(bp.y == IndepSet::of({1}));
    }
    SUBCASE("empty set stays empty") {
        const BasisPair bp = basis_pair(path3, IndepSet{}, 0);
        CHECK(bp.x == IndepSet{});
        CHECK(bp.y == IndepSet::of({0}));
    }
    SUBCASE("single edge drops the neighbor") {
        const Hypergraph edge(2, {{0, 1}});
        const BasisPair bp = basis_pair(edge, IndepSet::of({1}), 0);
        CHECK(bp.x == IndepSet{});
        CHECK(bp.y == IndepSet::of({0}));
    }
}

TEST_CASE("extract_f on the swap automorphism of a single edge") {
    const Hypergraph edge(2, {{0, 1}});
    const CubeGraph c = build_cube(edge);  // vertices {}, {0}, {1}
    const CubeIso swap{&c, &c, Permutation{0, 2, 1}};
    REQUIRE(swap.is_isomorphism());
    CHECK(extract_f(swap) == std::vector<VertexId>{1, 0});
}

TEST_CASE("extract_f on the identity is the identity") {
    const Hypergraph h = path_hypergraph(4);
    const CubeGraph c = build_cube(h);
    const CubeIso id{&c, &c, identity_map(c.verts.size())};
    CHECK(extract_f(id) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(extract_offset(id, extract_f(id)) == VertexSet{});
}

TEST_CASE("extract_f on the path reversal") {
    const CubeGraph c = build_cube(path_hypergraph(3));
    const auto autos = cube_automorphisms(c);
    REQUIRE(autos.size() == 2);
    const CubeIso rev{&c, &c, autos[1]};
    CHECK(extract_f(rev) == std::vector<VertexId>{2, 1, 0});
    CHECK(extract_offset(rev, extract_f(rev)) == VertexSet{});
}

TEST_CASE("isolated vertex swap carries a nonempty offset") {
    const Hypergraph lone(1, {});
    const CubeGraph c = build_cube(lone);  // K2: {}, {0}
    const CubeIso swap{&c, &c, Permutation{1, 0}};
    REQUIRE(swap.is_isomorphism());
    const auto f = extract_f(swap);
    CHECK(f == std::vector<VertexId>{0});
    CHECK(extract_offset(swap, f) == VertexSet::of({0}));
    CHECK(verify_factorization(swap, f, VertexSet::of({0})).ok());
}

TEST_CASE("extract_f requires a cube vertex as base") {
    const CubeGraph c = build_cube(path_hypergraph(3));
    const CubeIso id{&c, &c, identity_map(c.verts.size())};
    CHECK_THROWS_AS(extract_f(id, IndepSet::of({0, 1})), std::invalid_argument);
}

TEST_CASE("extract_f fails loudly on a corrupted map") {
    const CubeGraph c = build_cube(path_hypergraph(3));
    Permutation corrupted = identity_map(c.verts.size());
    // send {} -> {0,2} and {0,2} -> {}: basis images stop being adjacent
    std::swap(corrupted[0], corrupted[4]);
    const CubeIso bad{&c, &c, corrupted};
    CHECK_FALSE(bad.is_isomorphism());
    CHECK_THROWS_AS(extract_f(bad), IntegrityError);
}

TEST_CASE("verify_factorization passes every automorphism of small cubes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Hypergraph h = random_hypergraph(2 + seed % 5, 3, 0.4, seed, false);
        const CubeGraph c = build_cube(h);
        if (c.verts.size() > 64) continue;
        for (const Permutation& g : cube_automorphisms(c)) {
            const CubeIso iso{&c, &c, g};
            const auto f = extract_f(iso);
            const VertexSet offset = extract_offset(iso, f);
            const auto report = verify_factorization(iso, f, offset);
            CHECK(report.ok());
            CHECK(report.checked_vertices == c.verts.size());
        }
    }
}

TEST_CASE("verify_factorization names the failing vertex of a mutant") {
    const CubeGraph c = build_cube(path_hypergraph(3));
    const auto autos = cube_automorphisms(c);
    const CubeIso valid{&c, &c, autos[1]};
    const auto f = extract_f(valid);
    const VertexSet offset = extract_offset(valid, f);

    Permutation corrupted = autos[1];
    std::swap(corrupted[2], corrupted[3]);
    const CubeIso mutant{&c, &c, corrupted};
    const auto report = verify_factorization(mutant, f, offset);
    CHECK_FALSE(report.ok());
    bool names_vertex = false;
    for (const std::string& line : report.failures)
        if (line.find("vertex {") != std::string::npos) names_vertex = true;
    CHECK(names_vertex);
}

TEST_CASE("check_iso fixtures") {
    const Hypergraph path3 = path_hypergraph(3);
    CHECK(check_iso({0, 1, 2}, path3, path3));
    CHECK(check_iso({2, 1, 0}, path3, path3));
    CHECK_FALSE(check_iso({0, 2, 1}, path3, path3));
    CHECK_THROWS_AS(check_iso({0, 0, 1}, path3, path3), std::invalid_argument);
}

TEST_CASE("canonical paths: removals ascending, then additions ascending") {
    const Hypergraph path3 = path_hypergraph(3);
    CHECK(canonical_path(path3, IndepSet::of({0, 2}), IndepSet{}) ==
          std::vector<IndepSet>{IndepSet::of({0, 2}), IndepSet::of({2}), IndepSet{}});
    CHECK(canonical_path(path3, IndepSet::of({0, 2}), IndepSet::of({0, 2})) ==
          std::vector<IndepSet>{IndepSet::of({0, 2})});
    CHECK(canonical_path(path3, IndepSet{}, IndepSet::of({0, 2})) ==
          std::vector<IndepSet>{IndepSet{}, IndepSet::of({0}), IndepSet::of({0, 2})});
}

TEST_CASE("canonical paths step by one element through independent sets") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Hypergraph h = random_hypergraph(6, 3, 0.3, seed, false);
        const CubeGraph c = build_cube(h);
        const auto masks = edge_masks(h);
        for (std::size_t a = 0; a < c.verts.size(); a += 3)
            for (std::size_t b = 0; b < c.verts.size(); b += 3) {
                const auto path = canonical_path(h, c.verts[a], c.verts[b]);
                CHECK(path.size() == (c.verts[a] ^ c.verts[b]).size() + 1);
                CHECK(path.front() == c.verts[a]);
                CHECK(path.back() == c.verts[b]);
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    CHECK((path[i] ^ path[i + 1]).size() == 1);
                    CHECK(is_independent_mask(masks, path[i].bits));
                }
            }
    }
}

TEST_CASE("canonical path rejects dependent endpoints") {
    const Hypergraph path3 = path_hypergraph(3);
    CHECK_THROWS_AS(canonical_path(path3, IndepSet::of({0, 1}), IndepSet{}), IntegrityError);
}

TEST_CASE("offset witnesses on fixtures") {
    SUBCASE("single edge") {
        const Hypergraph edge(2, {{0, 1}});
        const auto w = refute_offset_witness(edge, VertexSet::of({0}));
        REQUIRE(w.has_value());
        CHECK(w->r == IndepSet::of({1}));
        CHECK(w->edge == Edge{0, 1});
        CHECK(w->valid());
    }
    SUBCASE("isolated vertex has no witness") {
        const Hypergraph lone(1, {});
        CHECK_FALSE(refute_offset_witness(lone, VertexSet::of({0})).has_value());
    }
    SUBCASE("path middle vertex") {
        const Hypergraph path3 = path_hypergraph(3);
        const auto w = refute_offset_witness(path3, VertexSet::of({1}));
        REQUIRE(w.has_value());
        CHECK(w->r == IndepSet::of({0}));
        CHECK(w->valid());
    }
    SUBCASE("empty offset is an input error") {
        CHECK_THROWS_AS(refute_offset_witness(path_hypergraph(3), VertexSet{}),
                        std::invalid_argument);
    }
}

TEST_CASE("offset witnesses are valid certificates on random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Hypergraph h = random_hypergraph(2 + seed % 6, 3, 0.35, seed, true);
        const std::uint64_t full = (std::uint64_t{1} << h.num_vertices()) - 1;
        const VertexSet b{1 + seed * 2654435761u % full};
        const auto w = refute_offset_witness(h, b);
        REQUIRE(w.has_value());  // no isolated vertices, so some member has an edge
        CHECK(w->valid());
        CHECK((VertexSet::from_vertices(w->edge).bits & ~(w->r ^ b).bits) == 0);
    }
}

TEST_CASE("theorem suite on fixtures") {
    SUBCASE("path on 3 vertices factors both automorphisms with empty offsets") {
        const Hypergraph h = path_hypergraph(3);
        const TheoremReport rep = theorem_suite(h, h);
        CHECK(rep.cube_iso_count == 2);
        CHECK(rep.hyper_iso_count == 2);
        CHECK(rep.offsets_empty);
        CHECK(rep.ok());
    }
    SUBCASE("single edge vs edgeless pair: no isos on either side") {
        const Hypergraph edge(2, {{0, 1}});
        const Hypergraph edgeless(2, {});
        const TheoremReport rep = theorem_suite(edge, edgeless);
        CHECK(rep.cube_iso_count == 0);
        CHECK(rep.hyper_iso_count == 0);
        CHECK(rep.part1_equiv);
        CHECK(rep.ok());
    }
    SUBCASE("empty hypergraphs have exactly the trivial isomorphism") {
        const Hypergraph empty(0, {});
        const TheoremReport rep = theorem_suite(empty, empty);
        CHECK(rep.cube_iso_count == 1);
        REQUIRE(rep.isos.size() == 1);
        CHECK(rep.isos[0].f.empty());
        CHECK(rep.isos[0].c == VertexSet{});
        CHECK(rep.ok());
    }
}

TEST_CASE("factorize bundles map, offset, and both validity checks") {
    const Hypergraph h(2, {{0, 1}});
    const CubeGraph c = build_cube(h);
    const Factorization fz = factorize(CubeIso{&c, &c, Permutation{0, 2, 1}});
    CHECK(fz.f == std::vector<VertexId>{1, 0});
    CHECK(fz.c == VertexSet{});
    CHECK(fz.f_bijective);
    CHECK(fz.hypergraph_iso);
    CHECK(fz.report.ok());
}

TEST_CASE("lazy extraction recovers a computable relabeling of the infinite path") {
    // T is the infinite path with every even/odd pair of labels swapped; the
    // cube isomorphism induced by the relabeling is delta -> swapped delta.
    auto swap_pair = [](VertexId v) { return v % 2 == 0 ? v + 1 : v - 1; };
    HypergraphOracle source = infinite_path_oracle();
    HypergraphOracle target;
    target.vertices_below = source.vertices_below;
    target.edges_containing = [swap_pair](VertexId u) {
        const VertexId v = swap_pair(u);
        std::vector<Edge> out;
        auto relabel = [&](Edge e) {
            for (VertexId& x : e) x = swap_pair(x);
            std::sort(e.begin(), e.end());
            return e;
        };
        if (v > 0) out.push_back(relabel({v - 1, v}));
        out.push_back(relabel({v, v + 1}));
        std::sort(out.begin(), out.end());
        return out;
    };

    LazyCubeIso iso;
    iso.source = ComponentHandle{&source, BasePoint{}, 8};
    iso.target = ComponentHandle{&target, BasePoint{}, 8};
    iso.g_delta = [swap_pair](const std::vector<VertexId>& delta) {
        std::vector<VertexId> out;
        for (VertexId v : delta) out.push_back(swap_pair(v));
        std::sort(out.begin(), out.end());
        return out;
    };

    const auto f = extract_f_lazy(iso, 8);
    for (VertexId v = 0; v < 7; ++v) {
        REQUIRE(f[v].has_value());
        CHECK(*f[v] == swap_pair(v));
    }
    CHECK_FALSE(f[7].has_value());  // neighbor 8 falls outside the window

    const LazyFactorization lf = factorize_lazy(iso, 3);
    CHECK(lf.report.sampled);
    CHECK(lf.report.ok());
    CHECK(lf.report.checked_vertices > 0);
    CHECK(lf.offset_in_window.empty());
}

TEST_CASE("lazy verification flags a corrupted delta oracle") {
    HypergraphOracle o = infinite_path_oracle();
    LazyCubeIso iso;
    iso.source = ComponentHandle{&o, BasePoint{}, 6};
    iso.target = ComponentHandle{&o, BasePoint{}, 6};
    iso.g_delta = [](const std::vector<VertexId>& delta) {
        if (delta == std::vector<VertexId>{0, 2}) return std::vector<VertexId>{0, 3};
        return delta;
    };
    const LazyFactorization lf = factorize_lazy(iso, 4);
    CHECK_FALSE(lf.report.ok());
}
