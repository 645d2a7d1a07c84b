#include "fibcube/factorize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fibcube/errors.hpp"

namespace fibcube {

bool CubeIso::is_isomorphism() const {
    if (!source || !target) return false;
    const std::size_t n = source->verts.size();
    if (target->verts.size() != n || map.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::int32_t w : map) {
        if (w < 0 || static_cast<std::size_t>(w) >= n || hit[static_cast<std::size_t>(w)])
            return false;
        hit[static_cast<std::size_t>(w)] = true;
    }
    // Bijective and degree-preserving with image(neighbors) == neighbors(image)
    // per vertex is exactly adjacency preservation in both directions.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int32_t> image;
        for (std::int32_t j : source->adj[i]) image.push_back(map[static_cast<std::size_t>(j)]);
        std::sort(image.begin(), image.end());
        if (image != target->adj[static_cast<std::size_t>(map[i])]) return false;
    }
    return true;
}

CubeIso CubeIso::checked(const CubeGraph& source, const CubeGraph& target, Permutation map) {
    CubeIso iso{&source, &target, std::move(map)};
    if (!iso.is_isomorphism())
        throw IntegrityError("map is not an adjacency-preserving bijection between the cubes");
    return iso;
}

BasisPair basis_pair(const Hypergraph& h, IndepSet s, VertexId v) {
    if (v >= h.num_vertices())
        throw std::out_of_range("basis_pair: vertex " + std::to_string(v) + " out of range");
    const std::uint64_t drop = VertexSet::bit(v) | neighbor_mask(h, v);
    BasisPair bp;
    bp.x = IndepSet{s.bits & ~drop};
    bp.y = bp.x.with(v);
    const auto masks = edge_masks(h);
    if (!is_independent_mask(masks, bp.x.bits) || !is_independent_mask(masks, bp.y.bits))
        throw IntegrityError("basis_pair: dependent result for vertex " + std::to_string(v) +
                             ", input set was not independent");
    return bp;
}

namespace {

std::int32_t require_cube_vertex(const CubeGraph& c, IndepSet s, const char* what) {
    const std::int32_t idx = c.index_of(s);
    if (idx < 0)
        throw std::invalid_argument(std::string(what) + ": " + format_set(s) +
                                    " is not a vertex of the cube");
    return idx;
}

VertexSet map_set(const std::vector<VertexId>& f, VertexSet s) {
    VertexSet out;
    for (VertexId v : s.members()) out = out.with(f[v]);
    return out;
}

}  // namespace

std::vector<VertexId> extract_f(const CubeIso& iso, IndepSet s_base) {
    const Hypergraph& base = iso.source->base;
    require_cube_vertex(*iso.source, s_base, "extract_f base");
    std::vector<VertexId> f(base.num_vertices());
    for (VertexId v = 0; v < base.num_vertices(); ++v) {
        const BasisPair bp = basis_pair(base, s_base, v);
        const std::int32_t ix = require_cube_vertex(*iso.source, bp.x, "extract_f");
        const std::int32_t iy = require_cube_vertex(*iso.source, bp.y, "extract_f");
        const VertexSet diff = iso.image(ix) ^ iso.image(iy);
        if (diff.size() != 1) {
            std::ostringstream os;
            os << "not an isomorphism: basis pair of vertex " << v << " maps to sets differing by "
               << format_set(diff);
            throw IntegrityError(os.str());
        }
        f[v] = diff.members().front();
    }
    return f;
}

VertexSet extract_offset(const CubeIso& iso, const std::vector<VertexId>& f, IndepSet s_base) {
    const std::int32_t is = require_cube_vertex(*iso.source, s_base, "extract_offset base");
    return map_set(f, s_base) ^ iso.image(is);
}

FactorizationReport verify_factorization(const CubeIso& iso, const std::vector<VertexId>& f,
                                         VertexSet c) {
    FactorizationReport report;
    const std::size_t n = iso.source->verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const IndepSet r = iso.source->verts[i];
        const VertexSet expected = map_set(f, r) ^ c;
        const VertexSet actual = iso.image(static_cast<std::int32_t>(i));
        ++report.checked_vertices;
        if (expected != actual) {
            std::ostringstream os;
            os << "vertex " << format_set(r) << ": g(r) = " << format_set(actual)
               << " but f[r] xor c = " << format_set(expected);
            report.failures.push_back(os.str());
            ++report.vertex_law_failures;
        }
    }
    // Edge transport: an edge toggling v must map to an edge toggling f(v).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int32_t j : iso.source->adj[i]) {
            if (static_cast<std::size_t>(j) <= i) continue;
            const VertexSet d = iso.source->verts[i] ^ iso.source->verts[static_cast<std::size_t>(j)];
            const VertexSet image_d =
                iso.image(static_cast<std::int32_t>(i)) ^ iso.image(j);
            ++report.checked_edges;
            if (d.size() != 1) {
                report.failures.push_back("edge " + format_set(iso.source->verts[i]) + " -- " +
                                          format_set(iso.source->verts[static_cast<std::size_t>(j)]) +
                                          " does not toggle one vertex");
                ++report.edge_transport_failures;
                continue;
            }
            const VertexId v = d.members().front();
            if (image_d != VertexSet::of({f[v]})) {
                std::ostringstream os;
                os << "edge toggling " << v << " at " << format_set(iso.source->verts[i])
                   << " maps to a difference of " << format_set(image_d) << ", expected {"
                   << f[v] << "}";
                report.failures.push_back(os.str());
                ++report.edge_transport_failures;
            }
        }
    }
    return report;
}

bool check_iso(const std::vector<VertexId>& f, const Hypergraph& s, const Hypergraph& t) {
    if (s.num_vertices() != t.num_vertices() || f.size() != s.num_vertices())
        throw std::invalid_argument("check_iso: f is not a bijection between the vertex sets");
    std::vector<bool> hit(t.num_vertices(), false);
    for (VertexId w : f) {
        if (w >= t.num_vertices() || hit[w])
            throw std::invalid_argument("check_iso: f is not a bijection between the vertex sets");
        hit[w] = true;
    }
    for (const Edge& e : s.edges()) {
        Edge image;
        for (VertexId v : e) image.push_back(f[v]);
        std::sort(image.begin(), image.end());
        if (!t.is_edge(image)) return false;
    }
    std::vector<VertexId> inv(f.size());
    for (VertexId v = 0; v < f.size(); ++v) inv[f[v]] = v;
    for (const Edge& e : t.edges()) {
        Edge preimage;
        for (VertexId w : e) preimage.push_back(inv[w]);
        std::sort(preimage.begin(), preimage.end());
        if (!s.is_edge(preimage)) return false;
    }
    return true;
}

std::vector<IndepSet> canonical_path(const Hypergraph& h, IndepSet from, IndepSet to) {
    const auto masks = edge_masks(h);
    auto require_independent = [&](IndepSet s) {
        if (!is_independent_mask(masks, s.bits))
            throw IntegrityError("canonical_path: intermediate set " + format_set(s) +
                                 " is dependent; input was corrupted");
    };
    std::vector<IndepSet> path{from};
    require_independent(from);
    IndepSet cur = from;
    for (VertexId v : VertexSet{from.bits & ~to.bits}.members()) {
        cur = cur.without(v);
        require_independent(cur);
        path.push_back(cur);
    }
    for (VertexId v : VertexSet{to.bits & ~from.bits}.members()) {
        cur = cur.with(v);
        require_independent(cur);
        path.push_back(cur);
    }
    return path;
}

std::optional<OffsetWitness> refute_offset_witness(const Hypergraph& h, VertexSet offset_b) {
    if (offset_b.empty()) throw std::invalid_argument("refute_offset_witness: empty offset");
    for (VertexId v : offset_b.members()) {
        if (v >= h.num_vertices() || h.incident_edges(v).empty()) continue;
        const Edge& e = h.edges()[h.incident_edges(v).front()];
        OffsetWitness w;
        w.edge = e;
        w.r = IndepSet{VertexSet::from_vertices(e).bits & ~offset_b.bits};
        const auto masks = edge_masks(h);
        w.r_independent = is_independent_mask(masks, w.r.bits);
        const VertexSet flipped = w.r ^ offset_b;
        w.xor_dependent = !is_independent_mask(masks, flipped.bits);
        w.edge_covered = (VertexSet::from_vertices(e).bits & ~flipped.bits) == 0;
        return w;
    }
    return std::nullopt;  // only isolated vertices: toggling them preserves independence
}

Factorization factorize(const CubeIso& iso, IndepSet s_base) {
    Factorization fz;
    fz.f = extract_f(iso, s_base);
    fz.c = extract_offset(iso, fz.f, s_base);
    fz.report = verify_factorization(iso, fz.f, fz.c);

    const std::size_t n = iso.source->base.num_vertices();
    std::vector<bool> hit(n, false);
    fz.f_bijective = true;
    for (VertexId w : fz.f) {
        if (w >= n || hit[w]) {
            fz.f_bijective = false;
            break;
        }
        hit[w] = true;
    }
    fz.hypergraph_iso = fz.f_bijective && check_iso(fz.f, iso.source->base, iso.target->base);
    return fz;
}

bool TheoremReport::ok() const {
    return part1_equiv && all_factor_ok && fc_to_g_injective && counts_match &&
           (!offsets_empty_applicable || offsets_empty);
}

TheoremReport theorem_suite(const Hypergraph& s, const Hypergraph& t,
                            std::size_t automorphism_cap) {
    TheoremReport report;
    const CubeGraph cs = build_cube(s);
    const CubeGraph ct = build_cube(t);
    const std::size_t cap = automorphism_cap != 0 ? automorphism_cap : kDefaultAutomorphismCap;
    if (cs.verts.size() > cap || ct.verts.size() > cap)
        throw CapError("theorem_suite: cube exceeds the automorphism cap of " +
                       std::to_string(cap));

    const auto cube_isos = graph_isomorphisms(cs.adj, ct.adj);
    const auto hyper_isos = hypergraph_isos(s, t);
    report.cube_iso_count = cube_isos.size();
    report.hyper_iso_count = hyper_isos.size();
    report.isolated_s = classify_vertices(s).isolated.size();
    report.isolated_t = classify_vertices(t).isolated.size();
    report.part1_equiv = cube_isos.empty() == hyper_isos.empty();
    if (!report.part1_equiv)
        report.failures.push_back("cube isomorphisms exist without hypergraph isomorphisms, or "
                                  "vice versa");

    const bool no_isolated = report.isolated_s == 0 && report.isolated_t == 0;
    report.offsets_empty_applicable = no_isolated;
    report.offsets_empty = true;
    report.all_factor_ok = true;

    std::set<std::pair<std::vector<VertexId>, std::uint64_t>> fc_pairs;
    for (std::size_t gi = 0; gi < cube_isos.size(); ++gi) {
        const CubeIso iso{&cs, &ct, cube_isos[gi]};
        IsoFactorRecord rec;
        rec.iso_index = gi;
        Factorization fz = factorize(iso);
        rec.f = fz.f;
        rec.c = fz.c;
        rec.verify_ok = fz.report.ok();
        rec.f_bijective = fz.f_bijective;
        rec.hypergraph_iso = fz.hypergraph_iso;
        for (const std::string& line : fz.report.failures)
            rec.failures.push_back("iso " + std::to_string(gi) + ": " + line);

        // Base-choice invariance: re-extract from every cube vertex.
        rec.base_invariant = true;
        for (const IndepSet& base : cs.verts) {
            if (extract_f(iso, base) != fz.f) {
                rec.base_invariant = false;
                rec.failures.push_back("iso " + std::to_string(gi) + ": extraction from base " +
                                       format_set(base) + " disagrees with the empty base");
                break;
            }
        }

        // A nonempty offset must consist of isolated vertices only; otherwise
        // the witness construction contradicts the isomorphism we just verified.
        rec.offset_refuted = true;
        if (!rec.c.empty() && rec.f_bijective) {
            std::vector<VertexId> inv(fz.f.size());
            for (VertexId v = 0; v < fz.f.size(); ++v) inv[fz.f[v]] = v;
            VertexSet b;
            for (VertexId w : rec.c.members()) b = b.with(inv[w]);
            if (auto witness = refute_offset_witness(s, b)) {
                rec.offset_refuted = false;
                rec.failures.push_back(
                    "iso " + std::to_string(gi) + ": nonempty offset " + format_set(rec.c) +
                    " over non-isolated vertices admits the contradiction witness r = " +
                    format_set(witness->r));
            }
        }

        if (no_isolated && !rec.c.empty()) {
            report.offsets_empty = false;
            report.failures.push_back("iso " + std::to_string(gi) + ": offset " +
                                      format_set(rec.c) + " nonempty without isolated vertices");
        }
        if (!rec.ok()) report.all_factor_ok = false;
        for (const std::string& line : rec.failures) report.failures.push_back(line);
        fc_pairs.emplace(rec.f, rec.c.bits);
        report.isos.push_back(std::move(rec));
    }

    report.fc_to_g_injective = fc_pairs.size() == cube_isos.size();
    if (!report.fc_to_g_injective)
        report.failures.push_back("distinct cube isomorphisms collapsed to the same (f, c)");

    // Counting: without isolated vertices the correspondence g <-> f is a
    // bijection. For the automorphism case the isolated vertices contribute an
    // independent 2^k factor of offset toggles.
    if (no_isolated) {
        report.counts_rule = "equal";
        report.counts_match = report.cube_iso_count == report.hyper_iso_count;
    } else if (s == t) {
        report.counts_rule = "aut-product";
        report.counts_match =
            report.cube_iso_count ==
            report.hyper_iso_count * (std::uint64_t{1} << report.isolated_s);
    } else {
        report.counts_rule = "n/a";
        report.counts_match = true;
    }
    if (!report.counts_match)
        report.failures.push_back("isomorphism counts do not satisfy the " + report.counts_rule +
                                  " rule: cube=" + std::to_string(report.cube_iso_count) +
                                  " hypergraph=" + std::to_string(report.hyper_iso_count));
    return report;
}

// ---------------------------------------------------------------------------
// Lazy mode

namespace {

std::vector<VertexId> sorted_union_toggle(const std::vector<VertexId>& base_delta,
                                          const std::vector<VertexId>& toggles) {
    VertexSet d = VertexSet::from_vertices(base_delta) ^ VertexSet::from_vertices(toggles);
    return d.members();
}

}  // namespace

std::vector<std::optional<VertexId>> extract_f_lazy(const LazyCubeIso& iso,
                                                    std::size_t extract_count) {
    if (!iso.source.oracle || !iso.target.oracle)
        throw std::invalid_argument("extract_f_lazy: missing oracle");
    const auto& oracle = *iso.source.oracle;
    const std::size_t window = iso.source.window;
    std::vector<std::optional<VertexId>> f(extract_count);

    for (VertexId v = 0; v < extract_count; ++v) {
        if (v >= window) continue;
        std::vector<VertexId> closed{v};
        bool in_window = true;
        for (const Edge& e : oracle.edges_containing(v))
            for (VertexId u : e) {
                if (u >= window) in_window = false;
                if (u != v) closed.push_back(u);
            }
        if (!in_window) continue;

        // delta of x relative to the base: members of {v} + neighbors that the
        // base contains get toggled off.
        std::vector<VertexId> delta_x;
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        for (VertexId u : closed)
            if (iso.source.base.contains(u)) delta_x.push_back(u);
        std::vector<VertexId> delta_y = sorted_union_toggle(delta_x, {v});

        const auto gx = iso.g_delta(delta_x);
        const auto gy = iso.g_delta(delta_y);
        const VertexSet diff = VertexSet::from_vertices(gx) ^ VertexSet::from_vertices(gy);
        if (diff.size() != 1)
            throw IntegrityError("not an isomorphism: basis pair of vertex " + std::to_string(v) +
                                 " maps to sets differing by " + format_set(diff));
        f[v] = diff.members().front();
    }
    return f;
}

LazyFactorization factorize_lazy(const LazyCubeIso& iso, std::size_t radius) {
    LazyFactorization out;
    out.f = extract_f_lazy(iso, iso.source.window);
    out.report.sampled = true;

    // Offset restricted to the extracted image: f(v) belongs to c exactly when
    // base membership of v and image membership of f(v) disagree.
    const std::vector<VertexId> g_base = iso.g_delta({});
    ComponentVertex g_of_base{iso.target.base, g_base};
    for (VertexId v = 0; v < out.f.size(); ++v) {
        if (!out.f[v]) continue;
        if (iso.source.base.contains(v) != g_of_base.contains(*out.f[v]))
            out.offset_in_window.push_back(*out.f[v]);
    }
    std::sort(out.offset_in_window.begin(), out.offset_in_window.end());

    // Sampled affine check in delta form: g(base xor d) xor g(base) = f[d].
    const BallGraph ball =
        windowed_ball(*iso.source.oracle, ComponentVertex{iso.source.base, {}}, radius,
                      iso.source.window);
    for (const VertexSet& d : ball.deltas) {
        bool extractable = true;
        VertexSet fd;
        for (VertexId v : d.members()) {
            if (v >= out.f.size() || !out.f[v]) {
                extractable = false;
                break;
            }
            fd = fd.with(*out.f[v]);
        }
        if (!extractable) continue;
        const VertexSet image = VertexSet::from_vertices(iso.g_delta(d.members()));
        const VertexSet base_image = VertexSet::from_vertices(g_base);
        ++out.report.checked_vertices;
        if ((image ^ base_image) != fd) {
            out.report.failures.push_back("delta " + format_set(d) +
                                          ": g(base xor d) xor g(base) = " +
                                          format_set(image ^ base_image) + " but f[d] = " +
                                          format_set(fd));
        }
    }
    return out;
}

}  // namespace fibcube
