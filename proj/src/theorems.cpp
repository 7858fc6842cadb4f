#include "ikmp/theorems.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "ikmp/generators.hpp"
#include "ikmp/graph.hpp"

namespace ikmp {

namespace {

// Exhaustively brute-forced for A(4,2), which sits outside the closed forms.
constexpr int kA42Mp = 4;
constexpr int kA42Smp = 4;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string arrangement_name(int n, int s) {
    return "A(" + std::to_string(n) + "," + std::to_string(s) + ")";
}

long long factorial_ratio(int hi, int lo) {
    long long out = 1;
    for (int i = lo + 1; i <= hi; ++i) out *= i;
    return out;
}

class SuiteRunner {
public:
    explicit SuiteRunner(const SuiteOptions& options) : opt_(options) {}

    TheoremSuiteReport take() { return std::move(report_); }

    void complete_graphs() {
        for (int n = 3; n <= opt_.kn_max; ++n)
            for (bool strong : {false, true}) {
                int expected = strong ? expected_smp_complete(n) : expected_mp_complete(n);
                exact_row(strong ? "kn-smp" : "kn-mp", "K_" + std::to_string(n), complete(n), strong,
                          expected, Provenance::paper);
            }
    }

    void bipartite() {
        std::mt19937_64 rng(opt_.seed);
        const int max_side = std::max(1, opt_.bipartite_max_order - 1);
        for (int i = 0; i < opt_.bipartite_graphs; ++i) {
            int a = 1 + static_cast<int>(rng() % max_side);
            int b = 1 + static_cast<int>(rng() % std::max(1, std::min(max_side, opt_.bipartite_max_order - a)));
            double p = 0.2 + static_cast<double>(rng() % 71) / 100.0;
            std::uint64_t seed = rng();
            Graph g = random_bipartite(a, b, p, seed);
            std::string name = "B(" + std::to_string(a) + "," + std::to_string(b) + ";p=" +
                               std::to_string(p).substr(0, 4) + ";seed=" + std::to_string(seed) + ")";
            if (g.order() % 2)
                odd_bipartite_row(name, g);
            else
                even_bipartite_rows(name, g);
        }
    }

    void arrangements() {
        for (auto [n, s] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 2}}) structure_rows(n, s);

        auto a42 = arrangement({4, 2}).graph;
        exact_row("arrangement-mp", arrangement_name(4, 2), a42, false, kA42Mp, Provenance::derived);
        exact_row("arrangement-smp", arrangement_name(4, 2), a42, true, kA42Smp, Provenance::derived);

        // smp^k(A(n,2)) = 2n-4 for n >= 5; smp^k(A(n,s)) = s(n-s) for 3 <= s <= n-2
        sampled_rows("arrangement-smp", 5, 2, 2 * 5 - 4, opt_.a52_samples);
        sampled_rows("arrangement-smp", 5, 3, 3 * (5 - 3), opt_.a53_samples);
    }

private:
    PreclusionQuery query(bool strong, PreclusionMode mode) const {
        return PreclusionQuery{opt_.k, strong, mode, opt_.budget, opt_.jobs};
    }

    TheoremRow& add(std::string theorem, std::string instance, std::string mode, Provenance provenance) {
        TheoremRow row;
        row.theorem = std::move(theorem);
        row.instance = std::move(instance);
        row.k = opt_.k;
        row.mode = std::move(mode);
        row.provenance = provenance;
        report_.rows.push_back(std::move(row));
        return report_.rows.back();
    }

    void exact_row(const std::string& theorem, const std::string& instance, const Graph& g, bool strong,
                   int expected, Provenance provenance) {
        auto start = Clock::now();
        TheoremRow& row = add(theorem, instance, "exact", provenance);
        row.expected = std::to_string(expected);
        try {
            auto r = preclusion_number(g, query(strong, ExactMode{}));
            row.computed = r.value ? std::to_string(*r.value) : "none";
            row.status = r.value == expected ? RowStatus::pass : RowStatus::fail;
        } catch (const BudgetExceeded&) {
            row.computed = "budget exceeded";
            row.status = RowStatus::skipped;
        }
        row.elapsed_ms = ms_since(start);
    }

    std::optional<int> exact_value(const Graph& g, int k, bool strong) {
        auto r = preclusion_number(g, PreclusionQuery{k, strong, ExactMode{}, opt_.budget, opt_.jobs});
        return r.value;
    }

    static std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

    void odd_bipartite_row(const std::string& instance, const Graph& g) {
        auto start = Clock::now();
        TheoremRow& row = add("bipartite-odd", instance, "exact", Provenance::paper);
        row.expected = "0,0";
        try {
            auto mp = exact_value(g, opt_.k, false), smp = exact_value(g, opt_.k, true);
            row.computed = show(mp) + "," + show(smp);
            row.status = mp == 0 && smp == 0 ? RowStatus::pass : RowStatus::fail;
        } catch (const BudgetExceeded&) {
            row.computed = "budget exceeded";
            row.status = RowStatus::skipped;
        }
        row.elapsed_ms = ms_since(start);
    }

    void even_bipartite_rows(const std::string& instance, const Graph& g) {
        {
            auto start = Clock::now();
            TheoremRow& row = add("bipartite-even-mp", instance, "exact", Provenance::paper);
            try {
                auto mp = exact_value(g, 1, false);
                row.expected = show(mp);
                auto mpk = exact_value(g, opt_.k, false);
                row.computed = show(mpk);
                row.status = mpk == mp ? RowStatus::pass : RowStatus::fail;
            } catch (const BudgetExceeded&) {
                row.computed = "budget exceeded";
                row.status = RowStatus::skipped;
            }
            row.elapsed_ms = ms_since(start);
        }
        auto start = Clock::now();
        TheoremRow& row = add("bipartite-even-smp", instance, "exact", Provenance::paper);
        try {
            auto smp = exact_value(g, 1, true);
            row.expected = "<=" + show(smp);
            auto smpk = exact_value(g, opt_.k, true);
            row.computed = show(smpk);
            row.status = smpk && smp && *smpk <= *smp ? RowStatus::pass : RowStatus::fail;
        } catch (const BudgetExceeded&) {
            row.computed = "budget exceeded";
            row.status = RowStatus::skipped;
        }
        row.elapsed_ms = ms_since(start);
    }

    void structure_row(const std::string& theorem, const std::string& instance, long long expected,
                       const std::string& computed, Clock::time_point start) {
        TheoremRow& row = add(theorem, instance, "structure", Provenance::paper);
        row.k = 0;
        row.expected = std::to_string(expected);
        row.computed = computed;
        row.status = computed == row.expected ? RowStatus::pass : RowStatus::fail;
        row.elapsed_ms = ms_since(start);
    }

    void structure_rows(int n, int s) {
        auto start = Clock::now();
        const std::string name = arrangement_name(n, s);
        auto a = arrangement({n, s});
        const Graph& g = a.graph;

        structure_row("arrangement-order", name, factorial_ratio(n, n - s), std::to_string(g.order()), start);

        std::set<int> degrees;
        for (Vertex v = 0; v < g.order(); ++v) degrees.insert(g.degree(v));
        structure_row("arrangement-regular", name, s * (n - s),
                      degrees.size() == 1 ? std::to_string(*degrees.begin()) : "irregular", start);

        std::set<std::size_t> block_orders;
        for (const auto& b : a.blocks) block_orders.insert(b.size());
        structure_row("arrangement-block-order", name, factorial_ratio(n - 1, n - s),
                      block_orders.size() == 1 ? std::to_string(*block_orders.begin()) : "uneven", start);

        // cross edges join different blocks; between two blocks they must be a
        // matching of the stated size
        std::map<std::pair<int, int>, long long> per_pair;
        std::map<std::pair<Vertex, int>, int> hits;
        for (const auto& e : g.edges()) {
            int bu = a.block_of(e.u), bv = a.block_of(e.v);
            if (bu == bv) continue;
            ++per_pair[{std::min(bu, bv), std::max(bu, bv)}];
            ++hits[{e.u, bv}];
            ++hits[{e.v, bu}];
        }
        std::set<long long> counts;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) counts.insert(per_pair[{i, j}]);
        structure_row("arrangement-cross-edges", name, factorial_ratio(n - 2, n - s - 1),
                      counts.size() == 1 ? std::to_string(*counts.begin()) : "varies", start);

        bool matching = true;
        for (const auto& [key, count] : hits) matching = matching && count == 1;
        TheoremRow& row = add("arrangement-cross-matching", name, "structure", Provenance::paper);
        row.k = 0;
        row.expected = "matching";
        row.computed = matching ? "matching" : "not a matching";
        row.status = matching ? RowStatus::pass : RowStatus::fail;
        row.elapsed_ms = ms_since(start);
    }

    void sampled_rows(const std::string& theorem, int n, int s, int expected, std::uint64_t samples) {
        const std::string name = arrangement_name(n, s);
        const Graph g = arrangement({n, s}).graph;
        {
            auto start = Clock::now();
            TheoremRow& row = add(theorem, name, "star", Provenance::paper);
            row.expected = "<=" + std::to_string(expected);
            FaultSet star = star_witness(g, opt_.k, 0, true);
            bool ok = is_preclusion_set(g, opt_.k, star, true);
            row.computed = ok ? "<=" + std::to_string(star.size()) : "star survives";
            row.status = ok && static_cast<int>(star.size()) == expected ? RowStatus::pass : RowStatus::fail;
            row.elapsed_ms = ms_since(start);
        }
        auto start = Clock::now();
        TheoremRow& row = add(theorem, name, "sample", Provenance::paper);
        row.expected = ">=" + std::to_string(expected);
        try {
            auto r = preclusion_number(g, query(true, SampleMode{expected, samples, opt_.seed}));
            if (r.status == PreclusionStatus::sampled_no_counterexample) {
                row.computed = "0/" + std::to_string(samples) + " size-" + std::to_string(expected - 1) +
                               " sets preclude";
                row.status = RowStatus::consistent;
            } else {
                row.computed = "size-" + std::to_string(expected - 1) + " counterexample";
                row.status = RowStatus::fail;
            }
        } catch (const BudgetExceeded&) {
            row.computed = "budget exceeded";
            row.status = RowStatus::skipped;
        }
        row.elapsed_ms = ms_since(start);
    }

    SuiteOptions opt_;
    TheoremSuiteReport report_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::paper ? "paper" : "derived"; }

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "pass";
        case RowStatus::fail: return "fail";
        case RowStatus::consistent: return "consistent";
        case RowStatus::skipped: return "skipped";
    }
    return "unknown";
}

int expected_mp_complete(int n) { return n == 3 || n == 5 ? n - 2 : n - 1; }
int expected_smp_complete(int n) { return n <= 5 ? n - 2 : n - 1; }

bool TheoremSuiteReport::passed() const {
    for (const auto& r : rows)
        if (r.status == RowStatus::fail) return false;
    return true;
}

void TheoremSuiteReport::write_csv(std::ostream& os) const {
    os << "theorem,instance,k,expected,computed,mode,provenance,status,elapsed_ms\n";
    for (const auto& r : rows)
        os << csv_field(r.theorem) << ',' << csv_field(r.instance) << ',' << r.k << ',' << csv_field(r.expected)
           << ',' << csv_field(r.computed) << ',' << r.mode << ',' << to_string(r.provenance) << ','
           << to_string(r.status) << ',' << static_cast<long long>(r.elapsed_ms + 0.5) << '\n';
}

nlohmann::json TheoremSuiteReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
        rows_json.push_back({{"theorem", r.theorem},
                             {"instance", r.instance},
                             {"k", r.k},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"mode", r.mode},
                             {"provenance", to_string(r.provenance)},
                             {"status", to_string(r.status)},
                             {"elapsed_ms", r.elapsed_ms}});
    return {{"rows", rows_json}, {"overall", passed() ? "pass" : "fail"}};
}

TheoremSuiteReport run_theorem_suite(const std::string& suite, const SuiteOptions& options) {
    if (options.k < 3 || options.k % 2 == 0) throw InputError("theorem suites need an odd k >= 3");
    if (suite != "kn" && suite != "bipartite" && suite != "arrangement" && suite != "all")
        throw InputError("unknown suite '" + suite + "'");
    if (options.kn_max > 12 || options.bipartite_max_order < 2 || options.bipartite_graphs < 0)
        throw InputError("suite limits out of range");
    SuiteRunner runner(options);
    if (suite == "kn" || suite == "all") runner.complete_graphs();
    if (suite == "bipartite" || suite == "all") runner.bipartite();
    if (suite == "arrangement" || suite == "all") runner.arrangements();
    return runner.take();
}

}  // namespace ikmp
