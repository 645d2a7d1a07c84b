#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Factorization law suite, run in two sweeps: exhaustively over every simple
// hypergraph on at most 5 vertices, and over 200 seeded random instances on at
// most 7. Per instance, theorem_suite checks
//   - edge transport: each cube edge toggling v maps to an edge toggling f(v)
//   - extracted f is a total bijection, identical from every extraction base
//   - the affine law g(r) = f[r] xor c on every cube vertex
//   - f transports edges of the base hypergraphs both ways
//   - nonempty offsets never survive over non-isolated vertices
//   - the counting correspondences against the brute-force automorphism lists

#include <algorithm>
#include <bit>

#include "fibcube/factorize.hpp"
#include "fibcube/verify.hpp"

using namespace fibcube;

namespace {

void require_clean(const TheoremReport& rep) {
    if (!rep.ok()) {
        for (const std::string& line : rep.failures) MESSAGE(line);
    }
    CHECK(rep.part1_equiv);
    CHECK(rep.all_factor_ok);
    CHECK(rep.fc_to_g_injective);
    CHECK(rep.counts_match);
    if (rep.offsets_empty_applicable) CHECK(rep.offsets_empty);
}

}  // namespace

TEST_CASE("exhaustive sweep over every simple hypergraph on <= 5 vertices") {
    std::size_t instances = 0;
    for (std::size_t m = 0; m <= 5; ++m)
        for (const Hypergraph& h : enumerate_simple_hypergraphs(m)) {
            require_clean(theorem_suite(h, h));
            ++instances;
        }
    // 1, 1, 2, 9, 114, 6894 simple hypergraphs on 0..5 labeled vertices —
    // frozen from the independent power-set filter below.
    CHECK(instances == 1 + 1 + 2 + 9 + 114 + 6894);
}

TEST_CASE("antichain enumeration matches the power-set filter") {
    for (std::size_t m = 0; m <= 4; ++m) {
        std::vector<Edge> cands;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            if (std::popcount(mask) >= 2) cands.push_back(VertexSet{mask}.members());
        std::size_t count = 0;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cands.size()); ++pick) {
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < cands.size(); ++i)
                if (pick & (std::uint64_t{1} << i)) chosen.push_back(cands[i]);
            bool antichain = true;
            for (const Edge& a : chosen)
                for (const Edge& b : chosen)
                    if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                        antichain = false;
            if (antichain) ++count;
        }
        CHECK(enumerate_simple_hypergraphs(m).size() == count);
    }
}

TEST_CASE("random sweep over 200 seeded instances on <= 7 vertices") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t extra = seed % 4 == 3 ? 1 + seed % 2 : 0;
        const std::size_t n = 2 + seed % (6 - extra);
        Hypergraph h = random_hypergraph(n, 3, 0.2 + 0.1 * (seed % 4), seed, true);
        if (extra) h = Hypergraph(h.num_vertices() + extra, h.edges());
        require_clean(theorem_suite(h, h));
    }
}

TEST_CASE("pair sweep: cube isomorphism iff hypergraph isomorphism") {
    std::size_t isomorphic_pairs = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 4;
        const Hypergraph s = random_hypergraph(n, 3, 0.35, seed, true);
        const Hypergraph t = random_hypergraph(n, 3, 0.35, seed + 7777, true);
        const TheoremReport rep = theorem_suite(s, t);
        require_clean(rep);
        if (rep.cube_iso_count > 0) ++isomorphic_pairs;
        CHECK((rep.cube_iso_count > 0) == (rep.hyper_iso_count > 0));
    }
    CHECK(isomorphic_pairs > 0);  // the sweep exercises both branches
}
