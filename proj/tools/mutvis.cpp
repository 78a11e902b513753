// mutvis: verify, construct, search for, and tabulate mutual-visibility
// sets on Cartesian products of paths and cycles.
//
// Exit codes: 0 success, 1 verification/search failure, 2 input error,
// 3 unsupported construction size, 4 timeout-partial result.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mutvis/mutvis.hpp"

namespace {

using namespace mutvis;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitPartial = 4;

int env_threads() {
    const char* raw = std::getenv("MUTVIS_THREADS");
    if (!raw) return 1;
    const int n = std::atoi(raw);
    return n >= 1 ? n : 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_set(const VertexSet& m, const std::string& format) {
    if (format == "grid")
        std::cout << m.graph().to_string() << "\n" << m.render_grid();
    else
        std::cout << m.to_json().dump() << "\n";
}

nlohmann::json report_json(const ProductGraph& g, const SolveReport& rep) {
    nlohmann::json wit = nlohmann::json::array();
    for (const Vertex v : rep.witness.members_lex()) wit.push_back({v.x, v.y});
    return nlohmann::json{{"graph", g.to_string()},       {"mu", rep.mu},
                          {"exhaustive", rep.exhaustive}, {"witness", std::move(wit)},
                          {"nodes", rep.nodes_explored},  {"ms", rep.elapsed.count()}};
}

int cmd_verify(const std::string& graph_str, const std::string& set_path) {
    const ProductGraph g = ProductGraph::parse(graph_str);
    const VertexSet m = VertexSet::parse_json(read_input(set_path));
    if (m.graph() != g)
        throw InputError("set file is for " + m.graph().to_string() + ", not " + graph_str);
    const VisibilityReport rep = is_mutual_visibility_set(g, m, env_threads());
    if (rep.ok) {
        std::cout << "OK (n=" << m.size() << ")\n";
        return kExitOk;
    }
    const auto [u, v] = *rep.failing_pair;
    std::cout << "FAIL: (" << u.x << "," << u.y << ") and (" << v.x << "," << v.y
              << ") are not mutually visible (after " << rep.pairs_checked << " pairs)\n";
    return kExitVerifyFail;
}

int cmd_construct(int t, int s, bool cylinder, const std::string& format, bool no_verify) {
    VertexSet m = [&]() {
        if (cylinder) {
            VertexSet c = construct_cylinder(t);
            if (s > 0 && s != t - 1) c = embed_cylinder(c, s);
            return c;
        }
        VertexSet sq = construct_torus_square(t);
        if (s > 0 && s != t) sq = extend_torus_to(sq, s);
        return sq;
    }();
    if (!no_verify) {
        const VisibilityReport rep = is_mutual_visibility_set(m, env_threads());
        if (!rep.ok) {
            const auto [u, v] = *rep.failing_pair;
            std::cerr << "internal error: construction failed verification at (" << u.x << ","
                      << u.y << ")-(" << v.x << "," << v.y << ")\n";
            return kExitVerifyFail;
        }
    }
    emit_set(m, format);
    return kExitOk;
}

int cmd_mu(const std::string& graph_str, double timeout_sec, const std::string& seed_path,
           bool force) {
    const ProductGraph g = ProductGraph::parse(graph_str);
    SolveOptions opts;
    opts.force = force;
    if (timeout_sec > 0)
        opts.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_sec * 1000));
    if (!seed_path.empty()) {
        VertexSet seed = VertexSet::parse_json(read_input(seed_path));
        if (seed.graph() != g)
            throw InputError("seed set is for " + seed.graph().to_string() + ", not " + graph_str);
        opts.seed_lower_bound = std::move(seed);
    }
    const SolveReport rep = mu_exact(g, opts);
    std::cout << report_json(g, rep).dump() << "\n";
    return rep.exhaustive ? kExitOk : kExitPartial;
}

int cmd_render(const std::string& set_path, const std::string& graph_str,
               const std::string& format) {
    const std::string text = read_input(set_path);
    VertexSet m = [&]() {
        if (!text.empty() && text[0] == '{') return VertexSet::parse_json(text);
        if (!graph_str.empty())
            return VertexSet::parse_grid(ProductGraph::parse(graph_str), text);
        return VertexSet::parse_grid(text);  // descriptor line in the file
    }();
    emit_set(m, format);
    return kExitOk;
}

int cmd_table(const std::string& which, int max_t, int max_s, double timeout_sec,
              std::uint64_t seed) {
    const bool torus = which == "CC" || which == "cc";
    if (!torus && which != "PC" && which != "pc")
        throw InputError("--which must be PC or CC");
    int mismatches = 0;
    bool partial = false;
    std::cout << "t\\s";
    for (int s = 3; s <= max_s; ++s) std::cout << "\t" << s;
    std::cout << "\n";
    for (int t = 3; t <= max_t; ++t) {
        std::cout << t;
        for (int s = 3; s <= max_s; ++s) {
            std::cout << "\t";
            if (torus && s < t) {
                std::cout << "";
                continue;
            }
            const ProductGraph g = torus
                                       ? ProductGraph(Factor::cycle(s), Factor::cycle(t))
                                       : ProductGraph(Factor::path(s), Factor::cycle(t));
            const auto known = known_mu(g);
            std::string cell;
            std::optional<int> exact;
            if (g.vertex_count() <= 64) {
                SolveOptions opts;
                if (timeout_sec > 0)
                    opts.timeout = std::chrono::milliseconds(
                        static_cast<std::int64_t>(timeout_sec * 1000));
                const SolveReport rep = mu_exact(g, opts);
                if (rep.exhaustive) {
                    exact = rep.mu;
                    cell = std::to_string(rep.mu);
                } else {
                    partial = true;
                    cell = ">=" + std::to_string(rep.mu) + "/<=" +
                           std::to_string(upper_bound(g));
                }
            } else {
                const auto [lb, wit] = mu_lower_bound(g, seed);
                cell = ">=" + std::to_string(lb) + "/<=" + std::to_string(upper_bound(g));
            }
            if (known && exact) {
                if (*exact == known->value) {
                    cell += "*";
                } else {
                    cell += "!=" + std::to_string(known->value);
                    std::cerr << "MISMATCH at " << g.to_string() << ": solver " << *exact
                              << ", published " << known->value << "\n";
                    ++mismatches;
                }
            }
            std::cout << cell;
        }
        std::cout << "\n";
    }
    if (mismatches) return kExitVerifyFail;
    return partial ? kExitPartial : kExitOk;
}

int cmd_search(const std::string& graph_str, int target, std::uint64_t seed, int restarts,
               std::int64_t iters, double timeout_sec, const std::string& format) {
    const ProductGraph g = ProductGraph::parse(graph_str);
    SearchOptions opts;
    opts.rng_seed = seed;
    opts.restarts = restarts;
    opts.iterations = iters;
    if (timeout_sec > 0)
        opts.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_sec * 1000));
    const auto found = search_witness(g, target, opts);
    if (!found) {
        std::cerr << "no " << target << "-vertex mutual-visibility set found on "
                  << g.to_string() << " (try more restarts or a different seed)\n";
        return kExitVerifyFail;
    }
    emit_set(*found, format);
    return kExitOk;
}

int cmd_check(int ceiling, const std::string& fixtures_dir) {
    const int threads = env_threads();
    int checked = 0;
    auto fail = [&](const std::string& what) {
        std::cerr << "CHECK FAILED: " << what << "\n";
        return kExitVerifyFail;
    };

    // torus families
    for (int t = 15; t <= ceiling; ++t) {
        if (!family_applies(torus_family(t), t)) continue;
        const VertexSet m = construct_torus_square(t);
        if (m.size() != 3 * t)
            return fail("torus t=" + std::to_string(t) + " cardinality " +
                        std::to_string(m.size()));
        const VisibilityReport rep = is_mutual_visibility_set(m, threads);
        if (!rep.ok) {
            const auto [u, v] = *rep.failing_pair;
            return fail("torus family t=" + std::to_string(t) + " pair (" +
                        std::to_string(u.x) + "," + std::to_string(u.y) + ")-(" +
                        std::to_string(v.x) + "," + std::to_string(v.y) + ")");
        }
        ++checked;
    }
    // extensions: one fiber, a half round, a full round per family
    for (int t = 15; t <= std::min(ceiling, 22); ++t) {
        if (!family_applies(torus_family(t), t)) continue;
        const VertexSet base = construct_torus_square(t);
        for (int i : {1, t / 2, t}) {
            const VertexSet ext = extend_torus(base, insertion_plan(t, i));
            const VisibilityReport rep = is_mutual_visibility_set(ext, threads);
            if (!rep.ok)
                return fail("extension t=" + std::to_string(t) + " i=" + std::to_string(i));
            ++checked;
        }
    }
    // cylinders and embeddings
    for (int t = 13; t <= ceiling; ++t) {
        const VertexSet base = construct_torus_base(t);
        if (!is_mutual_visibility_set(base, threads).ok)
            return fail("cylinder core t=" + std::to_string(t));
        const VertexSet m = construct_cylinder(t);
        if (m.size() != 2 * t)
            return fail("cylinder t=" + std::to_string(t) + " cardinality " +
                        std::to_string(m.size()));
        const VisibilityReport rep = is_mutual_visibility_set(m, threads);
        if (!rep.ok) {
            const auto [u, v] = *rep.failing_pair;
            return fail("cylinder t=" + std::to_string(t) + " pair (" + std::to_string(u.x) +
                        "," + std::to_string(u.y) + ")-(" + std::to_string(v.x) + "," +
                        std::to_string(v.y) + ")");
        }
        if (!is_mutual_visibility_set(embed_cylinder(m, t + 3), threads).ok)
            return fail("cylinder embedding t=" + std::to_string(t));
        checked += 3;
    }

    // published-value cross-checks across overlapping regimes
    for (int t = 6; t <= 17; ++t)
        for (int s = std::max(3, t - 1); s <= 12; ++s) {
            const auto v = known_mu(ProductGraph(Factor::path(s), Factor::cycle(t)));
            if (!v || v->value != 2 * t)
                return fail("cylinder table row t=" + std::to_string(t) +
                            " does not settle at 2t");
            ++checked;
        }
    for (int t = 3; t <= 13; ++t) {
        const auto v = known_mu(ProductGraph(Factor::cycle(14), Factor::cycle(t)));
        if (!v || v->value != 3 * t)
            return fail("torus table row t=" + std::to_string(t) + " does not settle at 3t");
        ++checked;
    }
    for (int t = 14; t <= ceiling; ++t) {
        if (!family_applies(torus_family(t), t)) continue;
        const auto v = known_mu(ProductGraph(Factor::cycle(t), Factor::cycle(t)));
        if (!v || v->value != 3 * t || v->value != construct_torus_square(t).size())
            return fail("construction/known value mismatch at t=" + std::to_string(t));
        ++checked;
    }

    // fixture witnesses, when present
    namespace fs = std::filesystem;
    if (!fixtures_dir.empty() && fs::exists(fixtures_dir)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(fixtures_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            VertexSet m = [&]() {
                try {
                    return VertexSet::parse_json(read_input(file.string()));
                } catch (const InputError& e) {
                    throw InputError("fixture " + file.filename().string() + ": " + e.what());
                }
            }();
            const VisibilityReport rep = is_mutual_visibility_set(m, threads);
            if (!rep.ok) {
                const auto [u, v] = *rep.failing_pair;
                return fail("fixture " + file.filename().string() + " pair (" +
                            std::to_string(u.x) + "," + std::to_string(u.y) + ")-(" +
                            std::to_string(v.x) + "," + std::to_string(v.y) + ")");
            }
            if (const auto known = known_mu(m.graph());
                known && m.size() != known->value)
                return fail("fixture " + file.filename().string() + " has " +
                            std::to_string(m.size()) + " vertices, published value is " +
                            std::to_string(known->value));
            ++checked;
        }
    }

    std::cout << "OK (" << checked << " checks)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutual-visibility sets on products of paths and cycles"};
    app.require_subcommand(1);

    std::string graph_str, set_path, format = "json", which = "CC", fixtures = "data/fixtures";
    int t = 0, s = 0, target = 0, max_t = 6, max_s = 8, ceiling = 40, restarts = 20;
    bool cylinder = false, no_verify = false, force = false;
    double timeout_sec = 0;
    std::uint64_t seed = 0;
    std::int64_t iters = 200000;

    auto* verify = app.add_subcommand("verify", "check a vertex set file");
    verify->add_option("--graph", graph_str, "graph descriptor, e.g. C15xC15")->required();
    verify->add_option("--set", set_path, "vertex set JSON file ('-' for stdin)")->required();

    auto* construct = app.add_subcommand("construct", "emit a closed-form set");
    construct->add_option("--t", t, "cycle order t")->required();
    construct->add_option("--s", s, "extend/embed to first-factor order s");
    construct->add_flag("--cylinder", cylinder, "cylinder family on P_{t-1} x C_t");
    construct->add_option("--format", format, "json or grid");
    construct->add_flag("--no-verify", no_verify, "skip the pre-emission verification");

    auto* mu = app.add_subcommand("mu", "exact mutual-visibility number");
    mu->add_option("--graph", graph_str, "graph descriptor")->required();
    mu->add_option("--timeout", timeout_sec, "seconds before returning a partial result");
    mu->add_option("--set", set_path, "seed witness JSON file");
    mu->add_flag("--force", force, "search graphs above the vertex cap");

    auto* table = app.add_subcommand("table", "tabulate values over a (s,t) range");
    table->add_option("--which", which, "PC (path x cycle) or CC (cycle x cycle)");
    table->add_option("--max-t", max_t, "largest cycle order t");
    table->add_option("--max-s", max_s, "largest first-factor order s");
    table->add_option("--timeout", timeout_sec, "per-cell time budget in seconds");
    table->add_option("--seed", seed, "seed for lower-bound restarts");

    auto* render = app.add_subcommand("render", "convert between JSON and grid renderings");
    render->add_option("--set", set_path, "input file ('-' for stdin)")->required();
    render->add_option("--graph", graph_str, "graph descriptor (required for grid input)");
    render->add_option("--format", format, "json or grid");

    auto* search = app.add_subcommand("search", "heuristic fixed-size witness search");
    search->add_option("--graph", graph_str, "graph descriptor")->required();
    search->add_option("--target", target, "witness cardinality to look for")->required();
    search->add_option("--seed", seed, "random seed");
    search->add_option("--restarts", restarts, "annealing restarts");
    search->add_option("--iters", iters, "annealing moves per restart");
    search->add_option("--timeout", timeout_sec, "overall time budget in seconds");
    search->add_option("--format", format, "json or grid");

    auto* check = app.add_subcommand("check", "verify every construction and cross-check");
    check->add_option("--ceiling", ceiling, "largest t to verify");
    check->add_option("--fixtures", fixtures, "directory of fixture witness files");

    try {
        app.parse(argc, argv);
        if (format != "json" && format != "grid")
            throw InputError("--format must be json or grid");
        if (verify->parsed()) return cmd_verify(graph_str, set_path);
        if (construct->parsed()) return cmd_construct(t, s, cylinder, format, no_verify);
        if (mu->parsed()) return cmd_mu(graph_str, timeout_sec, set_path, force);
        if (table->parsed()) return cmd_table(which, max_t, max_s, timeout_sec, seed);
        if (render->parsed()) return cmd_render(set_path, graph_str, format);
        if (search->parsed())
            return cmd_search(graph_str, target, seed, restarts, iters, timeout_sec, format);
        if (check->parsed()) return cmd_check(ceiling, fixtures);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    } catch (const UnsupportedSizeError& e) {
        std::cerr << "unsupported size: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
