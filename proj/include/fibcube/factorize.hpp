#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibcube/cube.hpp"
#include "fibcube/lazy.hpp"

namespace fibcube {

/// A vertex-index bijection between two finite cubes. `checked` verifies the
/// map is an adjacency-preserving bijection; tests build raw structs to feed
/// corrupted maps through the detection paths.
struct CubeIso {
    const CubeGraph* source = nullptr;
    const CubeGraph* target = nullptr;
    Permutation map;

    bool is_isomorphism() const;
    static CubeIso checked(const CubeGraph& source, const CubeGraph& target, Permutation map);

    IndepSet image(std::int32_t source_index) const {
        return target->verts[static_cast<std::size_t>(map[static_cast<std::size_t>(source_index)])];
    }
};

/// x = s with v and every neighbor of v removed; y = x + v. Both are
/// independent whenever s is: every edge through v contains a neighbor of v,
/// and x avoids them all. Verified anyway; a failure signals corrupted input.
struct BasisPair {
    IndepSet x;
    IndepSet y;
};
BasisPair basis_pair(const Hypergraph& h, IndepSet s, VertexId v);

/// Recovers the vertex map f from a cube isomorphism: for each vertex v of
/// the source hypergraph, f(v) is the unique element of
/// g(x) XOR g(y) for the basis pair (x, y) of v at s_base. Throws
/// IntegrityError (naming v) if that difference does not have exactly one
/// element, which is impossible for a true isomorphism. s_base must be a cube
/// vertex (std::invalid_argument otherwise); the default base is the empty set.
std::vector<VertexId> extract_f(const CubeIso& iso, IndepSet s_base = {});

/// c = f[s_base] XOR g(s_base).
VertexSet extract_offset(const CubeIso& iso, const std::vector<VertexId>& f, IndepSet s_base = {});

struct FactorizationReport {
    std::vector<std::string> failures;  // each entry names the offending vertex or edge
    std::size_t checked_vertices = 0;
    std::size_t checked_edges = 0;
    std::size_t vertex_law_failures = 0;    // g(r) != f[r] xor c
    std::size_t edge_transport_failures = 0;  // image edge toggles the wrong vertex
    bool sampled = false;  // true when verification covered a sample, not everything
    bool ok() const { return failures.empty(); }
};

/// Checks g(r) = f[r] XOR c for every source cube vertex, and the edge
/// transport law: an edge toggling v maps to an edge toggling exactly f(v).
/// Failures are report entries, not errors.
FactorizationReport verify_factorization(const CubeIso& iso, const std::vector<VertexId>& f,
                                         VertexSet c);

/// True iff f carries edges to edges in both directions. Throws
/// std::invalid_argument when f is not a bijection between the vertex sets.
bool check_iso(const std::vector<VertexId>& f, const Hypergraph& s, const Hypergraph& t);

/// The step path from one independent set to another: remove from\to in
/// ascending id order, then add to\from in ascending id order. Consecutive
/// sets differ by one element; every intermediate set is independent (checked;
/// IntegrityError on violation, which true inputs cannot produce). Length is
/// |from XOR to| + 1 vertices.
std::vector<IndepSet> canonical_path(const Hypergraph& h, IndepSet from, IndepSet to);

/// The contradiction certificate against a nonempty offset: r is independent,
/// yet r XOR b contains the edge, so toggling b does not preserve independence.
struct OffsetWitness {
    IndepSet r;          // e \ b
    Edge edge;           // the edge through the chosen non-isolated vertex of b
    bool r_independent = false;
    bool xor_dependent = false;
    bool edge_covered = false;  // edge is a subset of r XOR b
    bool valid() const { return r_independent && xor_dependent && edge_covered; }
};

/// For nonempty b: picks the smallest non-isolated vertex of b and its first
/// edge e, and returns r = e \ b together with the certificate checks. Returns
/// nothing when b consists of isolated vertices only (toggling those preserves
/// independence, so no contradiction exists). Throws std::invalid_argument for
/// empty b.
std::optional<OffsetWitness> refute_offset_witness(const Hypergraph& h, VertexSet offset_b);

/// One factored isomorphism: the vertex map, the offset, and the verification
/// detail tying them to g.
struct Factorization {
    std::vector<VertexId> f;
    VertexSet c;
    FactorizationReport report;
    bool f_bijective = false;
    bool hypergraph_iso = false;  // check_iso(f, source base, target base)
};
Factorization factorize(const CubeIso& iso, IndepSet s_base = {});

struct IsoFactorRecord {
    std::size_t iso_index = 0;
    std::vector<VertexId> f;
    VertexSet c;
    bool verify_ok = false;      // affine form + edge transport
    bool f_bijective = false;
    bool base_invariant = false; // extract_f agrees from every cube vertex as base
    bool hypergraph_iso = false;
    bool offset_refuted = false; // nonempty c over non-isolated vertices never survives
    std::vector<std::string> failures;
    bool ok() const {
        return verify_ok && f_bijective && base_invariant && hypergraph_iso && offset_refuted;
    }
};

struct TheoremReport {
    std::size_t cube_iso_count = 0;
    std::size_t hyper_iso_count = 0;
    std::size_t isolated_s = 0;
    std::size_t isolated_t = 0;
    bool part1_equiv = false;            // cube isos exist <=> hypergraph isos exist
    bool all_factor_ok = false;          // every record ok()
    bool offsets_empty = false;          // c = {} on every iso; vacuous without isolated vertices? see flag
    bool offsets_empty_applicable = false;  // neither side has isolated vertices
    bool fc_to_g_injective = false;      // distinct isos produced distinct (f, c)
    bool counts_match = false;           // see counts_rule
    std::string counts_rule;             // "equal", "aut-product", or "n/a"
    std::vector<IsoFactorRecord> isos;
    std::vector<std::string> failures;   // aggregated counterexample text
    bool ok() const;
};

/// Builds both cubes, enumerates every cube isomorphism by brute force,
/// factors each one, and checks the factorization laws plus the counting
/// correspondences. All findings are report entries.
TheoremReport theorem_suite(const Hypergraph& s, const Hypergraph& t,
                            std::size_t automorphism_cap = 0);

// ---------------------------------------------------------------------------
// Lazy mode: g is an oracle on deltas, verification is sampled.

/// Isomorphism between windowed components, given as a pure oracle mapping a
/// delta over the source base to a delta over the target base.
struct LazyCubeIso {
    ComponentHandle source;
    ComponentHandle target;
    std::function<std::vector<VertexId>(const std::vector<VertexId>&)> g_delta;
};

/// f(v) for every v in [0, extract_count) whose neighbors all lie inside the
/// source window; entries outside that reach stay unset. Same failure contract
/// as extract_f.
std::vector<std::optional<VertexId>> extract_f_lazy(const LazyCubeIso& iso,
                                                    std::size_t extract_count);

struct LazyFactorization {
    std::vector<std::optional<VertexId>> f;
    std::vector<VertexId> offset_in_window;  // restriction of c to the extracted image
    FactorizationReport report;              // report.sampled is always true
};

/// Verifies g(base XOR d) XOR g(base) = f[d] over the BFS ball of the given
/// radius around the source base. Sampled, never exhaustive: the report says so.
LazyFactorization factorize_lazy(const LazyCubeIso& iso, std::size_t radius);

}  // namespace fibcube
