#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fibcube/cube.hpp"
#include "fibcube/errors.hpp"
#include "fibcube/factorize.hpp"
#include "fibcube/json_io.hpp"
#include "fibcube/lazy.hpp"
#include "fibcube/verify.hpp"

namespace {

using namespace fibcube;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct CommonOpts {
    std::string input;
    std::size_t path_n = 0;
    bool path_set = false;
    std::size_t cycle_n = 0;
    bool cycle_set = false;
    std::string format = "text";
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << payload;
}

Hypergraph load_hypergraph(const CommonOpts& o) {
    const int sources = (!o.input.empty()) + o.path_set + o.cycle_set;
    if (sources != 1)
        throw std::invalid_argument("give exactly one of --input, --path, --cycle");
    if (o.path_set) return path_hypergraph(o.path_n);
    if (o.cycle_set) return cycle_hypergraph(o.cycle_n);
    LabeledHypergraph lh = hypergraph_from_json_text(read_file(o.input));
    const ValidationReport report = validate(lh.h);
    if (!report.valid()) {
        std::string msg = "input hypergraph is not simple:";
        for (const std::string& v : report.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    return lh.h;
}

int cmd_gen(const CommonOpts& o) {
    const Hypergraph h = load_hypergraph(o);
    const CubeGraph c = build_cube(h);
    std::ostringstream counts;
    counts << "vertices: " << c.verts.size() << "\nedges: " << c.edge_count() << "\n";
    if (o.format == "text") {
        write_output(o.out, counts.str());
        return kExitOk;
    }
    const std::string payload =
        o.format == "dot" ? export_dot(c) : cube_to_json(c).dump() + "\n";
    write_output(o.out, payload);
    (o.out.empty() ? std::cerr : std::cout) << counts.str();
    return kExitOk;
}

int cmd_aut(const CommonOpts& o) {
    const Hypergraph h = load_hypergraph(o);
    const CubeGraph c = build_cube(h);
    const auto cube_autos = cube_automorphisms(c);
    const auto hyper_autos = hypergraph_isos(h, h);
    if (o.format == "json") {
        OrderedJson j;
        j["cube_vertices"] = c.verts.size();
        j["cube_automorphisms"] = cube_autos.size();
        j["hypergraph_automorphisms"] = hyper_autos.size();
        auto maps = OrderedJson::array();
        for (const VertexMap& f : hyper_autos) maps.push_back(f);
        j["hypergraph_automorphism_maps"] = std::move(maps);
        j["isolated"] = classify_vertices(h).isolated;
        write_output(o.out, j.dump() + "\n");
    } else {
        std::ostringstream os;
        os << "cube vertices: " << c.verts.size() << "\n"
           << "cube automorphisms: " << cube_autos.size() << "\n"
           << "hypergraph automorphisms: " << hyper_autos.size() << "\n";
        write_output(o.out, os.str());
    }
    return kExitOk;
}

int cmd_factorize(const CommonOpts& o) {
    if (o.input.empty()) throw std::invalid_argument("factorize requires --input");
    OrderedJson doc;
    try {
        doc = OrderedJson::parse(read_file(o.input));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("source"))
        throw std::invalid_argument("factorize input must contain 'source' and 'map'");
    const LabeledHypergraph source = hypergraph_from_json(doc.at("source"));
    const LabeledHypergraph target =
        doc.contains("target") ? hypergraph_from_json(doc.at("target")) : source;
    const CubeGraph cs = build_cube(source.h);
    const CubeGraph ct = build_cube(target.h);
    Permutation map = iso_map_from_json(doc, cs, ct);
    CubeIso iso;
    try {
        iso = CubeIso::checked(cs, ct, std::move(map));
    } catch (const IntegrityError& e) {
        throw std::invalid_argument(e.what());
    }
    const Factorization fz = factorize(iso);
    write_output(o.out, factorization_to_json(fz).dump() + "\n");
    return kExitOk;
}

int cmd_verify(const VerifyConfig& config, const std::string& out) {
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file '" + out + "'");
    }
    std::ostream& sink = out.empty() ? std::cout : file;
    const VerifyResult result =
        run_verify(config, [&sink](const std::string& line) { sink << line << "\n"; });
    return result.exit_code;
}

int cmd_explore(const std::string& base_text, std::size_t radius, std::size_t window,
                const std::string& format, const std::string& out) {
    const BasePoint base = parse_base_point(base_text);
    const HypergraphOracle oracle = infinite_path_oracle();
    const std::size_t horizon = base.width() + 2 * base.pattern.size();
    if (!base_point_independent(oracle, base, horizon))
        throw std::invalid_argument("base point '" + base_text + "' is not independent");
    const BallGraph ball = windowed_ball(oracle, ComponentVertex{base, {}}, radius, window);
    const std::string payload =
        format == "dot" ? ball_to_dot(ball) : ball_to_json(ball).dump() + "\n";
    write_output(out, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Fibonacci cubes: construction, automorphisms, factorization"};
    app.require_subcommand(1);

    CommonOpts gen_o, aut_o, fact_o;
    VerifyConfig vconfig;
    std::string verify_out;
    std::string base_text;
    std::size_t radius = 2, window = 4;
    std::string explore_format = "json", explore_out;

    auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_builders) {
        cmd->add_option("--input", o.input, "hypergraph JSON file");
        if (with_builders) {
            cmd->add_option("--path", o.path_n, "path hypergraph on N vertices");
            cmd->add_option("--cycle", o.cycle_n, "cycle hypergraph on N vertices");
        }
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        cmd->add_option("--out", o.out, "output file (default stdout)");
    };

    CLI::App* gen = app.add_subcommand("gen", "build the cube of a hypergraph");
    add_common(gen, gen_o, true);

    CLI::App* aut = app.add_subcommand("aut", "count cube and hypergraph automorphisms");
    add_common(aut, aut_o, true);

    CLI::App* fact = app.add_subcommand("factorize",
                                        "factor a cube isomorphism into (f, c)");
    add_common(fact, fact_o, false);

    CLI::App* verify = app.add_subcommand("verify", "run the factorization property sweep");
    verify->add_option("--seed", vconfig.seed, "sweep seed");
    verify->add_option("--samples", vconfig.samples, "random instances per section");
    verify->add_option("--exhaustive-n", vconfig.exhaustive_n,
                       "sweep all simple hypergraphs up to this many vertices");
    verify->add_option("--max-n", vconfig.max_n, "vertex bound for random instances");
    verify->add_flag("--self-test", vconfig.self_test,
                     "inject one corrupted isomorphism; the run must flag it and exit 1");
    verify->add_option("--out", verify_out, "report file (JSON lines, default stdout)");

    CLI::App* explore = app.add_subcommand("explore", "windowed ball in the infinite cube");
    explore->add_option("--base", base_text, "base point, e.g. \"prefix=0,2;pattern=10\"");
    explore->add_option("--radius", radius, "BFS radius");
    explore->add_option("--window", window, "toggle window [0, W)");
    explore->add_option("--format", explore_format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));
    explore->add_option("--out", explore_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }
    gen_o.path_set = gen->count("--path") > 0;
    gen_o.cycle_set = gen->count("--cycle") > 0;
    aut_o.path_set = aut->count("--path") > 0;
    aut_o.cycle_set = aut->count("--cycle") > 0;

    try {
        if (gen->parsed()) return cmd_gen(gen_o);
        if (aut->parsed()) return cmd_aut(aut_o);
        if (fact->parsed()) return cmd_factorize(fact_o);
        if (verify->parsed()) return cmd_verify(vconfig, verify_out);
        if (explore->parsed()) return cmd_explore(base_text, radius, window, explore_format,
                                                  explore_out);
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
