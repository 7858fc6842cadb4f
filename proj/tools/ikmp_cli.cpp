// ikmp: generate graphs, decide integer k-matchings, compute preclusion
// numbers and print the closed-form value tables.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
// 3 budget exceeded. IKMP_BUDGET overrides the fault-set budget.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ikmp/generators.hpp"
#include "ikmp/ikm.hpp"
#include "ikmp/io.hpp"
#include "ikmp/preclusion.hpp"
#include "ikmp/theorems.hpp"

namespace {

using namespace ikmp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t budget_from_env() {
    const char* raw = std::getenv("IKMP_BUDGET");
    if (!raw || !*raw) return kDefaultBudget;
    try {
        std::size_t used = 0;
        auto value = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return value;
    } catch (const std::exception&) {
        throw InputError(std::string("IKMP_BUDGET is not a number: ") + raw);
    }
}

unsigned resolve_jobs(unsigned jobs) {
    return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

struct GenArgs {
    std::string family, out;
    int n = 0, s = 0, a = 0, b = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& args) {
    Graph g;
    std::optional<ArrangementGraph> arr;
    const auto& f = args.family;
    if (f == "complete") g = complete(args.n);
    else if (f == "path") g = path(args.n);
    else if (f == "cycle") g = cycle(args.n);
    else if (f == "complete-bipartite") g = complete_bipartite(args.a, args.b);
    else if (f == "random-bipartite") g = random_bipartite(args.a, args.b, args.p, args.seed);
    else if (f == "random") g = random_graph(args.n, args.p, args.seed);
    else {
        arr = arrangement({args.n, args.s});
        g = arr->graph;
    }
    save_graph(args.out, g);
    if (arr) {
        std::ofstream side(args.out + ".labels.json");
        if (!side) throw InputError("cannot write " + args.out + ".labels.json");
        side << labels_to_json(*arr).dump() << '\n';
    }
    return kExitOk;
}

struct SolveArgs {
    std::string graph, mode = "perfect";
    int k = 1;
};

int run_solve(const SolveArgs& args) {
    Graph g = load_graph(args.graph);
    json out{{"graph", args.graph}, {"k", args.k}, {"mode", args.mode}};
    auto add_decision = [&](const Decision& d) {
        out["exists"] = d.exists;
        out["assignment"] = d.assignment ? assignment_to_json(g, *d.assignment) : json(nullptr);
        if (d.certificate) out["certificate"] = certificate_to_json(*d.certificate);
    };
    if (args.mode == "perfect") {
        add_decision(decide_perfect_ikm(g, args.k));
    } else if (args.mode == "almost") {
        add_decision(decide_almost_perfect_ikm(g, args.k, true));
    } else if (args.mode == "mu") {
        auto m = max_ikm(g, args.k);
        out["value"] = m.total();
        out["assignment"] = assignment_to_json(g, m);
    } else {
        auto c = lemma41_certificate(g, args.k);
        out["certificate"] = c ? certificate_to_json(*c) : json(nullptr);
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

struct PrecludeArgs {
    std::string graph;
    int k = 1;
    bool strong = false, exact = false;
    std::optional<int> verify;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
};

int run_preclude(const PrecludeArgs& args) {
    Graph g = load_graph(args.graph);
    PreclusionQuery q{args.k, args.strong, ExactMode{}, budget_from_env(), resolve_jobs(args.jobs)};
    if (args.sample) {
        if (!args.verify) throw InputError("--sample needs --verify m for the claimed value");
        q.mode = SampleMode{*args.verify, *args.sample, args.seed};
    } else if (args.verify) {
        q.mode = VerifyMode{*args.verify};
    }
    auto start = std::chrono::steady_clock::now();
    auto r = preclusion_number(g, q);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json out{{"graph", args.graph}};
    out.update(result_to_json(q, r));
    out["elapsed_ms"] = ms;
    std::cout << out.dump() << '\n';
    return r.status == PreclusionStatus::refuted ? kExitVerification : kExitOk;
}

struct TheoremArgs {
    std::string suite = "all", format = "csv";
    SuiteOptions options;
};

int run_theorems(TheoremArgs args) {
    args.options.budget = budget_from_env();
    args.options.jobs = resolve_jobs(args.options.jobs);
    auto report = run_theorem_suite(args.suite, args.options);
    if (args.format == "csv")
        report.write_csv(std::cout);
    else
        std::cout << report.to_json().dump(2) << '\n';
    return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer k-matching and preclusion toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
    gen_cmd->add_option("--family", gen.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"complete", "path", "cycle", "complete-bipartite", "random-bipartite", "random",
                               "arrangement"}));
    gen_cmd->add_option("--n", gen.n, "Order (arrangement: symbol count)");
    gen_cmd->add_option("--s", gen.s, "Arrangement tuple length");
    gen_cmd->add_option("--a", gen.a, "First bipartite side");
    gen_cmd->add_option("--b", gen.b, "Second bipartite side");
    gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("-o,--out", gen.out, "Output graph file")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Decide or maximize an integer k-matching");
    solve_cmd->add_option("graph", solve.graph, "Graph file")->required();
    solve_cmd->add_option("--k", solve.k, "k")->required();
    solve_cmd->add_option("--mode", solve.mode, "perfect, almost, mu or certificate")
        ->check(CLI::IsMember({"perfect", "almost", "mu", "certificate"}));

    PrecludeArgs preclude;
    auto* preclude_cmd = app.add_subcommand("preclude", "Compute or check a preclusion number");
    preclude_cmd->add_option("graph", preclude.graph, "Graph file")->required();
    preclude_cmd->add_option("--k", preclude.k, "k")->required();
    preclude_cmd->add_flag("--strong", preclude.strong, "Allow vertex faults");
    auto* exact_flag = preclude_cmd->add_flag("--exact", preclude.exact, "Exact enumeration (default)");
    auto* verify_opt = preclude_cmd->add_option("--verify", preclude.verify, "Check a claimed value m");
    auto* sample_opt = preclude_cmd->add_option("--sample", preclude.sample, "Sample N size m-1 fault sets");
    preclude_cmd->add_option("--seed", preclude.seed, "Sampling seed");
    preclude_cmd->add_option("--jobs", preclude.jobs, "Worker threads (0: all cores)");
    exact_flag->excludes(verify_opt)->excludes(sample_opt);

    TheoremArgs theorems;
    auto* theorems_cmd = app.add_subcommand("theorems", "Recompute the closed-form value tables");
    theorems_cmd->add_option("--suite", theorems.suite, "kn, bipartite, arrangement or all")
        ->check(CLI::IsMember({"kn", "bipartite", "arrangement", "all"}));
    theorems_cmd->add_option("--k", theorems.options.k, "Odd k >= 3");
    theorems_cmd->add_option("--format", theorems.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    theorems_cmd->add_option("--kn-max", theorems.options.kn_max, "Largest complete graph");
    theorems_cmd->add_option("--bipartite-graphs", theorems.options.bipartite_graphs, "Random bipartite graphs");
    theorems_cmd->add_option("--bipartite-max-order", theorems.options.bipartite_max_order, "Their largest order");
    theorems_cmd->add_option("--a52-samples", theorems.options.a52_samples, "Samples for A(5,2)");
    theorems_cmd->add_option("--a53-samples", theorems.options.a53_samples, "Samples for A(5,3)");
    theorems_cmd->add_option("--seed", theorems.options.seed, "Seed for random instances and samples");
    theorems_cmd->add_option("--jobs", theorems.options.jobs, "Worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*preclude_cmd) return run_preclude(preclude);
        return run_theorems(theorems);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
