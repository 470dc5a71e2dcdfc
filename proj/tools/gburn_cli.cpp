// Command-line front end: solve / verify / generate / reduce / params.
// Exit codes: 0 = YES or success, 1 = NO or failed verification,
// 2 = usage or input error, 3 = capacity limit hit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gburn/approx.hpp"
#include "gburn/components_solver.hpp"
#include "gburn/exact.hpp"
#include "gburn/gadget.hpp"
#include "gburn/generators.hpp"
#include "gburn/graph.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/schedule.hpp"
#include "gburn/set_cover.hpp"
#include "gburn/split_graph.hpp"
#include "gburn/split_solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

gburn::Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gburn::parse_error("cannot open graph file: " + path);
    return gburn::load_edge_list(in);
}

gburn::SetCoverInstance load_set_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gburn::parse_error("cannot open set cover file: " + path);
    return gburn::load_set_cover(in);
}

std::vector<int> load_id_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gburn::parse_error("cannot open file: " + path);
    std::vector<int> ids;
    long long v;
    while (in >> v) ids.push_back(static_cast<int>(v));
    return ids;
}

json schedule_json(const gburn::BurningSchedule& sched) {
    return json(sched.centers);
}

struct SolveOptions {
    std::string graph_file;
    std::string algo = "brute";
    int k = -1; // -1: compute the burning number / upper bound
    std::string ds_solver = "exact";
    int trials = 0;
    uint64_t seed = 0;
    bool minimal_family = false;
    std::string deletion_set_file;
    int threads = 1;
    bool deterministic = false;
};

/// Smallest k for which `decide` answers YES, scanning upward from `lo`.
template <typename Decide>
gburn::BurningNumberResult scan_burning_number(const gburn::Graph& g, int lo, Decide decide) {
    for (int k = std::max(1, lo);; ++k) {
        if (auto sched = decide(k)) return {k, *sched};
        if (k > g.n() + 1) throw std::logic_error("burning number scan ran past n+1");
    }
}

int cmd_solve(const SolveOptions& opt) {
    gburn::Graph g = load_graph_file(opt.graph_file);
    auto started = std::chrono::steady_clock::now();

    json out;
    out["algorithm"] = opt.algo;
    out["n"] = g.n();
    out["m"] = g.m();
    if (opt.k >= 0) out["k_query"] = opt.k;

    bool yes = false;
    std::optional<gburn::BurningSchedule> schedule;
    bool seed_relevant = false;

    if (opt.algo == "approx") {
        if (g.n() == 0) {
            out["answer"] = "upper_bound";
            out["burning_number"] = 0;
            out["verified"] = true;
            yes = true;
        } else {
            gburn::ApproxResult res = gburn::approx_burn(g);
            out["answer"] = "upper_bound";
            out["burning_number"] = res.k_upper;
            schedule = res.schedule;
            yes = true;
        }
    } else {
        gburn::ComponentsOptions copts;
        copts.use_color_coding = opt.ds_solver == "colorcoding";
        copts.trials = opt.trials;
        copts.seed = opt.seed;
        copts.minimal_family = opt.minimal_family;
        seed_relevant = opt.algo == "components" && copts.use_color_coding;

        std::optional<std::vector<int>> injected;
        if (!opt.deletion_set_file.empty()) injected = load_id_list(opt.deletion_set_file);
        std::optional<gburn::SplitSolver> split_solver;
        if (opt.algo == "split" && g.n() > 0) split_solver.emplace(g, injected);

        auto decide = [&](int k) -> std::optional<gburn::BurningSchedule> {
            if (opt.algo == "brute") return gburn::decide_burning_exact(g, k);
            if (opt.algo == "setcover") return gburn::decide_burning_via_set_cover(g, k);
            if (opt.algo == "components") return gburn::decide_burning_components(g, k, copts);
            return split_solver->solve(k);
        };

        if (g.n() == 0) {
            yes = true;
            schedule = gburn::BurningSchedule{};
            if (opt.k < 0) out["burning_number"] = 0;
        } else if (opt.k >= 0) {
            if (opt.k == 0) {
                yes = false;
            } else {
                schedule = decide(opt.k);
                yes = schedule.has_value();
            }
        } else {
            gburn::BurningNumberResult res =
                scan_burning_number(g, gburn::component_count(g), decide);
            out["burning_number"] = res.burning_number;
            schedule = res.schedule;
            yes = true;
        }
        out["answer"] = yes ? "yes" : "no";
    }

    bool verified = false;
    if (schedule) {
        verified = gburn::verify_schedule(g, *schedule).ok;
        out["schedule"] = schedule_json(*schedule);
    }
    out["verified"] = schedule ? verified : yes; // YES answers must carry a valid schedule
    auto elapsed = std::chrono::steady_clock::now() - started;
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (seed_relevant) out["seed"] = opt.seed;

    std::cout << out.dump(2) << '\n';
    if (schedule && !verified) {
        std::cerr << "internal error: schedule failed verification\n";
        return kExitNo;
    }
    return yes ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& graph_file, const std::string& schedule_file) {
    gburn::Graph g = load_graph_file(graph_file);
    std::ifstream in(schedule_file);
    if (!in) throw gburn::parse_error("cannot open schedule file: " + schedule_file);
    gburn::BurningSchedule sched = gburn::load_schedule(in);
    for (int v : sched.centers)
        if (v < 0 || v >= g.n())
            throw gburn::parse_error("schedule center " + std::to_string(v) +
                                     " outside 0.." + std::to_string(g.n() - 1));
    gburn::VerifyResult res = gburn::verify_schedule(g, sched);
    if (res.ok) {
        std::cout << "ok\n";
        return kExitYes;
    }
    std::cout << "uncovered:";
    for (int v : res.uncovered.to_vector()) std::cout << ' ' << v;
    std::cout << '\n';
    return kExitNo;
}

gburn::Graph parse_union_part(const std::string& part) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
        throw gburn::parse_error("union part needs kind:size, got '" + part + "'");
    std::string kind = part.substr(0, colon);
    int size = std::stoi(part.substr(colon + 1));
    if (kind == "path") return gburn::path_graph(size);
    if (kind == "cycle") return gburn::cycle_graph(size);
    if (kind == "complete") return gburn::complete_graph(size);
    if (kind == "star") return gburn::star_graph(size);
    throw gburn::parse_error("unknown union part kind: " + kind);
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& params,
                 uint64_t seed, const std::string& out_file) {
    std::ostringstream body;
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw gburn::parse_error("generator '" + kind + "' expects " +
                                     std::to_string(count) + " parameter(s)");
    };

    if (kind == "setcover") {
        need(3);
        gburn::SetCoverInstance inst =
            gburn::random_set_cover(std::stoi(params[0]), std::stoi(params[1]),
                                    std::stoi(params[2]), seed);
        gburn::write_set_cover(inst, body);
    } else {
        gburn::Graph g(0);
        if (kind == "path") {
            need(1);
            g = gburn::path_graph(std::stoi(params[0]));
        } else if (kind == "cycle") {
            need(1);
            g = gburn::cycle_graph(std::stoi(params[0]));
        } else if (kind == "complete") {
            need(1);
            g = gburn::complete_graph(std::stoi(params[0]));
        } else if (kind == "star") {
            need(1);
            g = gburn::star_graph(std::stoi(params[0]));
        } else if (kind == "gnp") {
            need(2);
            g = gburn::gnp(std::stoi(params[0]), std::stod(params[1]), seed);
        } else if (kind == "split") {
            need(1);
            g = gburn::random_split_graph(std::stoi(params[0]), seed);
        } else if (kind == "union") {
            if (params.empty()) throw gburn::parse_error("union needs at least one part");
            std::vector<gburn::Graph> parts;
            for (const std::string& p : params) parts.push_back(parse_union_part(p));
            g = gburn::disjoint_union(parts);
        } else {
            throw gburn::parse_error("unknown generator kind: " + kind);
        }
        gburn::write_edge_list(g, body);
    }

    if (out_file.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_file);
        if (!out) throw gburn::parse_error("cannot write: " + out_file);
        out << body.str();
    }
    return kExitYes;
}

int cmd_reduce(const std::string& sc_file, const std::string& out_file,
               const std::string& roles_file) {
    gburn::SetCoverInstance inst = load_set_cover_file(sc_file);
    gburn::GadgetInstance gi = gburn::setcover_to_burning(inst);
    gburn::validate_gadget(gi);

    {
        std::ofstream out(out_file);
        if (!out) throw gburn::parse_error("cannot write: " + out_file);
        out << "# burning instance for " << sc_file << ", k=" << gi.k << '\n';
        gburn::write_edge_list(gi.graph, out);
    }
    if (!roles_file.empty()) {
        std::ofstream out(roles_file);
        if (!out) throw gburn::parse_error("cannot write: " + roles_file);
        gburn::write_role_labels(gi, out);
    }

    json summary;
    summary["k"] = gi.k;
    summary["n"] = gi.graph.n();
    summary["m"] = gi.graph.m();
    summary["graph_file"] = out_file;
    if (!roles_file.empty()) summary["roles_file"] = roles_file;
    std::cout << summary.dump(2) << '\n';
    return kExitYes;
}

int cmd_params(const std::string& graph_file, int max_deletion) {
    gburn::Graph g = load_graph_file(graph_file);
    gburn::ComponentDecomposition decomp = gburn::connected_components(g);

    json out;
    out["n"] = g.n();
    out["m"] = g.m();
    out["p"] = decomp.p();
    out["d_max"] = g.n() == 0 ? 0 : decomp.max_diameter();
    out["is_split"] = gburn::is_split_graph(g);
    out["component_diameters"] = json(decomp.diameters);
    if (max_deletion >= 0) {
        auto s = gburn::minimum_split_deletion_set(g, max_deletion);
        if (s)
            out["split_distance"] = static_cast<int>(s->size());
        else
            out["split_distance"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit"};
    app.require_subcommand(1);

    SolveOptions sopt;
    CLI::App* solve = app.add_subcommand("solve", "decide burnability or compute bn(G)");
    solve->add_option("graph", sopt.graph_file, "edge-list file")->required();
    solve->add_option("-k,--rounds", sopt.k, "decide this schedule length (default: minimize)");
    solve->add_option("--algo", sopt.algo, "brute|setcover|approx|components|split")
        ->check(CLI::IsMember({"brute", "setcover", "approx", "components", "split"}));
    solve->add_option("--ds-solver", sopt.ds_solver,
                      "disjoint-set-selection backend for --algo components")
        ->check(CLI::IsMember({"exact", "colorcoding"}));
    solve->add_option("--trials", sopt.trials, "color-coding trials (0 = default count)");
    solve->add_option("--seed", sopt.seed, "random seed for color coding");
    solve->add_flag("--minimal-family", sopt.minimal_family,
                    "restrict the component family to minimal radius sets");
    solve->add_option("--deletion-set", sopt.deletion_set_file,
                      "file with a known split deletion set for --algo split");
    solve->add_option("--threads", sopt.threads,
                      "worker threads (current solvers are single-threaded)");
    solve->add_flag("--deterministic", sopt.deterministic,
                    "force the reproducible single-threaded mode");

    std::string verify_graph, verify_schedule_file;
    CLI::App* verify = app.add_subcommand("verify", "check a schedule against a graph");
    verify->add_option("graph", verify_graph, "edge-list file")->required();
    verify->add_option("schedule", verify_schedule_file, "whitespace-separated centers")
        ->required();

    std::string gen_kind, gen_out;
    std::vector<std::string> gen_params;
    uint64_t gen_seed = 0;
    CLI::App* generate = app.add_subcommand("generate", "write instances");
    generate->add_option("kind", gen_kind,
                         "path|cycle|complete|star|gnp|split|union|setcover")
        ->required();
    generate->add_option("params", gen_params, "generator parameters");
    generate->add_option("--seed", gen_seed, "random seed");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string reduce_in, reduce_out = "gadget.edges", reduce_roles;
    CLI::App* reduce = app.add_subcommand("reduce", "set cover file -> burning instance");
    reduce->add_option("setcover", reduce_in, "set cover file: 'n m s' + m element lines")
        ->required();
    reduce->add_option("-o,--output", reduce_out, "graph output file");
    reduce->add_option("--roles", reduce_roles, "also write a vertex role sidecar");

    std::string params_graph;
    int params_max_deletion = -1;
    CLI::App* params = app.add_subcommand("params", "report structural parameters as JSON");
    params->add_option("graph", params_graph, "edge-list file")->required();
    params->add_option("--max-deletion", params_max_deletion,
                       "also search a split deletion set up to this budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the error message
        return rc == 0 ? rc : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(sopt);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_schedule_file);
        if (generate->parsed()) return cmd_generate(gen_kind, gen_params, gen_seed, gen_out);
        if (reduce->parsed()) return cmd_reduce(reduce_in, reduce_out, reduce_roles);
        if (params->parsed()) return cmd_params(params_graph, params_max_deletion);
    } catch (const gburn::capacity_error& ex) {
        std::cerr << "capacity: " << ex.what() << '\n';
        return kExitCapacity;
    } catch (const gburn::parse_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
