#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locsep/locsep.hpp"

namespace {

using namespace locsep;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

struct RunConfig {
    int r = 3;
    int kmax = 1;
    int window = 8;
    std::string out = "json";
    std::string output;
    bool force = false;
    Limits caps;
    std::size_t cover_nodes = 200000;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg.output);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_config(const RunConfig& cfg) {
    if (cfg.r < 0 || cfg.kmax < 0) throw CLI::ValidationError("--r and --k must be non-negative");
    if (cfg.caps.cycles == 0 || cfg.caps.candidates == 0 || cfg.caps.tstars == 0 || cfg.caps.branches == 0 || cfg.cover_nodes == 0)
        throw CLI::ValidationError("caps must be positive");
}

int cmd_decompose(const std::string& input, const RunConfig& cfg) {
    auto g = load_graph(input);
    auto res = decompose_with_nested(g, cfg.r, cfg.kmax, cfg.caps);
    const auto& d = res.decomposition;
    auto bound = res.nested.induced_cycle_bound;
    std::string b = bound == kInfinity ? "infinity" : std::to_string(bound);
    if (d.beyond_guarantee) {
        if (!cfg.force)
            std::cerr << "warning: beyond guarantee: k=" << cfg.kmax << " at r=" << cfg.r
                      << " is not certified below K(G,r) by the induced-cycle bound " << b << "\n";
    } else {
        std::cerr << "guarantee: k=" << cfg.kmax << " at r=" << cfg.r << " within K(G,r) (induced-cycle bound " << b << ")\n";
    }
    emit(cfg, cfg.out == "dot" ? decomposition_dot(g, d) : dump(decomposition_json(g, d)));
    if (!d.valid) {
        std::cerr << "error: decomposition violates " << d.violated_axiom << " at " << d.witness << "\n";
        return kExitInvalid;
    }
    return 0;
}

int cmd_inspect(const std::string& input, const std::string& what, const RunConfig& cfg) {
    auto g = load_graph(input);
    Json out;
    if (what == "displacement") {
        out = displacement_json(displacement(g, cfg.r, cfg.window, cfg.cover_nodes));
    } else {
        LocalGraph lg(g, cfg.r, cfg.caps);
        if (what == "local-separators") out = local_separators_json(lg, cfg.kmax);
        else if (what == "local-separations") out = separations_json(g, enumerate_tight_local_separations(lg, cfg.kmax));
        else if (what == "bottlenecks-min") out = minimal_bottlenecks_json(lg, cfg.kmax);
        else out = nested_set_json(g, nested_set_local(lg, cfg.kmax).set);
    }
    emit(cfg, dump(out));
    return 0;
}

int cmd_verify(const std::string& input, std::vector<std::string> suites, const RunConfig& cfg) {
    auto g = load_graph(input);
    if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
    std::vector<SuiteResult> results;
    for (auto& s : suites) results.push_back(run_suite(s, g, cfg.r, cfg.kmax, cfg.window));
    auto report = verify_json(results);
    emit(cfg, dump(report));
    return report["passed"].get<bool>() ? 0 : kExitVerifyFailed;
}

int cmd_cover(const std::string& input, std::string sidecar, const RunConfig& cfg) {
    auto g = load_graph(input);
    auto w = build_cover_window(g, cfg.r, cfg.window, cfg.cover_nodes);
    std::cerr << "window: " << w.size() << " vertices, certified radius "
              << (w.certified_radius == kInfinity ? std::string("infinity") : std::to_string(w.certified_radius))
              << (w.closed ? " (closed)" : "") << "\n";
    emit(cfg, window_edge_list(w));
    if (sidecar.empty() && !cfg.output.empty()) sidecar = cfg.output + ".fibres.json";
    if (!sidecar.empty()) {
        std::ofstream f(sidecar, std::ios::binary);
        if (!f) throw InputError("cannot write " + sidecar);
        f << dump(fibre_json(g, w));
    }
    return 0;
}

int cmd_ring_gen(int n, const std::string& part, const std::string& a, const std::string& b, const RunConfig& cfg) {
    auto ring = ring_generator(n, load_graph(part), a, b, cfg.r);
    emit(cfg, "# displacement bound " + std::to_string(ring.displacement_bound) + "\n" + edge_list_text(ring.graph));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph decompositions from r-local separations"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML-style file with option values");
    RunConfig cfg;
    app.add_option("--r", cfg.r, "Locality radius")->capture_default_str();
    app.add_option("--k", cfg.kmax, "Maximum separation order")->capture_default_str();
    app.add_option("--window", cfg.window, "Cover window radius")->capture_default_str();
    app.add_option("--out", cfg.out, "Output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    app.add_option("--output,-o", cfg.output, "Output file (default stdout)");
    app.add_flag("--force", cfg.force, "Run beyond the guarantee without warning");
    app.add_option("--cap-cycles", cfg.caps.cycles, "Short-cycle cap")->capture_default_str();
    app.add_option("--cap-candidates", cfg.caps.candidates, "Separator candidate cap")->capture_default_str();
    app.add_option("--cap-tstars", cfg.caps.tstars, "T-star cap")->capture_default_str();
    app.add_option("--cap-branches", cfg.caps.branches, "Bottleneck search branch cap")->capture_default_str();
    app.add_option("--cap-cover", cfg.cover_nodes, "Cover window node cap")->capture_default_str();

    std::string input, what, part, ga, gb, sidecar;
    std::vector<std::string> suites;
    int copies = 6;

    auto* dec = app.add_subcommand("decompose", "Build the graph-decomposition");
    dec->add_option("input", input, "Edge-list file or fixture:NAME")->required();
    auto* ins = app.add_subcommand("inspect", "List intermediate objects");
    ins->add_option("input", input, "Edge-list file or fixture:NAME")->required();
    ins->add_option("what", what, "Object to list")
        ->required()
        ->check(CLI::IsMember({"local-separators", "local-separations", "bottlenecks-min", "nested-set", "displacement"}));
    auto* ver = app.add_subcommand("verify", "Run oracle suites");
    ver->add_option("input", input, "Edge-list file or fixture:NAME")->required();
    auto names = suite_names();
    names.push_back("all");
    ver->add_option("--suite", suites, "Suite name (repeatable)")->check(CLI::IsMember(names));
    auto* cov = app.add_subcommand("cover", "Emit a window of the r-local cover");
    cov->add_option("input", input, "Edge-list file or fixture:NAME")->required();
    cov->add_option("--sidecar", sidecar, "Fibre annotation file");
    auto* ring = app.add_subcommand("ring-gen", "Glue copies of a part into a ring");
    ring->add_option("--n", copies, "Number of copies")->capture_default_str();
    ring->add_option("--part", part, "Edge-list file or fixture:NAME")->required();
    ring->add_option("--a", ga, "Gluing vertex a")->required();
    ring->add_option("--b", gb, "Gluing vertex b")->required();
    for (auto* sub : {dec, ins, ver, cov, ring}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        check_config(cfg);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dec->parsed()) return cmd_decompose(input, cfg);
        if (ins->parsed()) return cmd_inspect(input, what, cfg);
        if (ver->parsed()) return cmd_verify(input, suites, cfg);
        if (cov->parsed()) return cmd_cover(input, sidecar, cfg);
        return cmd_ring_gen(copies, part, ga, gb, cfg);
    } catch (const CapOverflow& e) {
        std::cerr << "error: cap overflow: " << e.what() << "\n";
        return kExitCap;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
