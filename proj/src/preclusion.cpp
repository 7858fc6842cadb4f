#include "ikmp/preclusion.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "ikmp/ikm.hpp"
#include "ikmp/matching.hpp"

namespace ikmp {

std::string to_string(PreclusionStatus status) {
    switch (status) {
        case PreclusionStatus::proved: return "proved";
        case PreclusionStatus::upper_bound_only: return "upper_bound_only";
        case PreclusionStatus::sampled_no_counterexample: return "sampled_no_counterexample";
        case PreclusionStatus::refuted: return "refuted";
    }
    return "upper_bound_only";
}

std::uint64_t binomial(int n, int t) {
    if (t < 0 || n < 0 || t > n) return 0;
    t = std::min(t, n - t);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (int i = 1; i <= t; ++i) {
        acc = acc * static_cast<unsigned>(n - t + i) / static_cast<unsigned>(i);
        if (acc > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<int> unrank_combination(int n, int t, std::uint64_t rank) {
    std::vector<int> combo;
    combo.reserve(t);
    int next = 0;
    for (int i = 0; i < t; ++i) {
        for (int c = next; c < n; ++c) {
            std::uint64_t below = binomial(n - c - 1, t - i - 1);
            if (rank < below) {
                combo.push_back(c);
                next = c + 1;
                break;
            }
            rank -= below;
        }
    }
    return combo;
}

namespace {

bool advance(std::vector<int>& combo, int n) {
    const int t = static_cast<int>(combo.size());
    int i = t - 1;
    while (i >= 0 && combo[i] == n - t + i) --i;
    if (i < 0) return false;
    ++combo[i];
    for (int j = i + 1; j < t; ++j) combo[j] = combo[j - 1] + 1;
    return true;
}

struct FaultSpace {
    FaultSpace(const Graph& graph, bool strong) : g(graph) {
        for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
        if (strong)
            for (Vertex v = 0; v < g.order(); ++v) vertices.push_back(g.label(v));
    }

    int size() const { return static_cast<int>(edges.size() + vertices.size()); }

    FaultSet make(const std::vector<int>& combo) const {
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        const int m = static_cast<int>(edges.size());
        for (int idx : combo) {
            if (idx < m) es.push_back(edges[idx]);
            else vs.push_back(vertices[idx - m]);
        }
        return FaultSet(std::move(vs), std::move(es));
    }

    const Graph& g;
    std::vector<Edge> edges;      // labels
    std::vector<Vertex> vertices; // labels
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

unsigned worker_count(unsigned jobs, std::uint64_t work) {
    unsigned w = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(w, work)));
}

// Lowest rank among size-t combinations whose fault set satisfies
// `precluded`, or nullopt. Each worker scans one contiguous rank range and
// stops once it passes the best rank found so far, so the answer does not
// depend on the worker count.
std::optional<std::uint64_t> scan_size(const FaultSpace& space, int t,
                                       const std::function<bool(const Graph&)>& precluded,
                                       unsigned jobs, std::atomic<std::uint64_t>& spent, std::uint64_t budget) {
    const int n = space.size();
    const std::uint64_t total = binomial(n, t);
    if (total == 0) return std::nullopt;
    constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<bool> over_budget{false};

    const unsigned workers = worker_count(jobs, total);
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        auto combo = unrank_combination(n, t, begin);
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            if (rank > best.load(std::memory_order_relaxed) || over_budget.load(std::memory_order_relaxed)) return;
            if (spent.fetch_add(1, std::memory_order_relaxed) >= budget) {
                over_budget = true;
                return;
            }
            if (precluded(delete_faults(space.g, space.make(combo)))) {
                std::uint64_t cur = best.load();
                while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                }
                return;
            }
            if (rank + 1 < end) advance(combo, n);
        }
    };

    if (workers == 1) {
        run(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / workers, extra = total % workers;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t len = chunk + (w < extra ? 1 : 0);
            pool.emplace_back(run, begin, begin + len);
            begin += len;
        }
        for (auto& th : pool) th.join();
    }
    // a worker that ran dry may have left ranks below `best` untested
    if (over_budget) throw BudgetExceeded("enumeration budget of " + std::to_string(budget) + " fault sets exhausted");
    if (best.load() != kNone) return best.load();
    return std::nullopt;
}

// Deleting the edges at v isolates it. For k >= 2 an isolated vertex sums to
// 0, never k or k-1; for k = 1 this still precludes when |V| is even.
bool star_applies(const Graph& g, int k) { return g.order() >= 1 && (k >= 2 || g.order() % 2 == 0); }

FaultSet star_of(const Graph& g, Vertex idx) {
    std::vector<Edge> star;
    for (Vertex w : g.neighbors(idx)) star.push_back({g.label(idx), g.label(w)});
    return FaultSet({}, std::move(star));
}

std::optional<int> capped_size(const Graph& g, int k) {
    if (!star_applies(g, k)) return std::nullopt;
    return min_degree(g);
}

std::function<bool(const Graph&)> ikm_predicate(int k) {
    return [k](const Graph& h) { return !admits_near_perfect_ikm(h, k); };
}

// Size-m witness: a star of a lowest-labelled minimum-degree vertex when
// m equals the star bound, else the first precluding size-m combination.
std::optional<FaultSet> upper_witness(const Graph& g, const PreclusionQuery& q, int m, std::uint64_t& checked) {
    if (auto cap = capped_size(g, q.k); cap && *cap == m) {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == m) {
                ++checked;
                auto star = star_of(g, v);
                if (!is_preclusion_set(g, q.k, star, q.strong))
                    throw std::logic_error("star at vertex " + std::to_string(g.label(v)) + " failed to preclude");
                return star;
            }
    }
    FaultSpace space(g, q.strong);
    std::atomic<std::uint64_t> spent{0};
    auto rank = scan_size(space, m, ikm_predicate(q.k), q.jobs, spent, q.budget);
    checked += std::min<std::uint64_t>(spent.load(), q.budget);
    if (!rank) return std::nullopt;
    return space.make(unrank_combination(space.size(), m, *rank));
}

PreclusionResult run_exact(const Graph& g, const PreclusionQuery& q) {
    PreclusionResult r;
    auto out = enumerate_minimum(g, q.strong, ikm_predicate(q.k), q.budget, q.jobs, capped_size(g, q.k));
    r.checked = out.checked;
    r.status = PreclusionStatus::proved;
    if (out.witness) {
        r.value = static_cast<int>(out.witness->size());
        r.witness = std::move(out.witness);
    }
    return r;
}

PreclusionResult run_verify(const Graph& g, const PreclusionQuery& q, int m) {
    if (m < 0) throw InputError("verify mode needs m >= 0");
    PreclusionResult r;
    FaultSpace space(g, q.strong);
    if (m >= 1) {
        if (binomial(space.size(), m - 1) > q.budget)
            throw BudgetExceeded("verify mode needs " + std::to_string(binomial(space.size(), m - 1)) +
                                 " fault sets, budget is " + std::to_string(q.budget) + "; use sample mode");
        std::atomic<std::uint64_t> spent{0};
        auto rank = scan_size(space, m - 1, ikm_predicate(q.k), q.jobs, spent, q.budget);
        if (rank) {
            r.checked = *rank + 1;
            r.counterexample = space.make(unrank_combination(space.size(), m - 1, *rank));
            r.status = PreclusionStatus::refuted;
            return r;
        }
        r.checked = binomial(space.size(), m - 1);
    }
    r.witness = upper_witness(g, q, m, r.checked);
    if (!r.witness) {
        r.status = PreclusionStatus::refuted;
        return r;
    }
    r.value = m;
    r.status = PreclusionStatus::proved;
    return r;
}

PreclusionResult run_sample(const Graph& g, const PreclusionQuery& q, const SampleMode& s) {
    if (s.m < 1) throw InputError("sample mode needs m >= 1");
    if (s.count < 1) throw InputError("sample mode needs count >= 1");
    PreclusionResult r;
    FaultSpace space(g, q.strong);
    const int n = space.size();
    if (s.m - 1 > n) throw InputError("sample size exceeds the number of fault elements");

    r.witness = upper_witness(g, q, s.m, r.checked);

    auto precluded = ikm_predicate(q.k);
    std::mt19937_64 rng(s.seed);
    std::vector<int> pool(n);
    const int t = s.m - 1;
    for (std::uint64_t i = 0; i < s.count; ++i) {
        std::iota(pool.begin(), pool.end(), 0);
        // partial Fisher-Yates: the first t slots are a uniform t-subset
        for (int j = 0; j < t; ++j) {
            std::uniform_int_distribution<int> pick(j, n - 1);
            std::swap(pool[j], pool[pick(rng)]);
        }
        std::vector<int> combo(pool.begin(), pool.begin() + t);
        std::sort(combo.begin(), combo.end());
        ++r.checked;
        FaultSet f = space.make(combo);
        if (precluded(delete_faults(g, f))) {
            r.counterexample = std::move(f);
            r.status = PreclusionStatus::refuted;
            return r;
        }
    }
    r.status = r.witness ? PreclusionStatus::sampled_no_counterexample : PreclusionStatus::refuted;
    return r;
}

}  // namespace

EnumerationOutcome enumerate_minimum(const Graph& g, bool strong,
                                     const std::function<bool(const Graph&)>& precluded,
                                     std::uint64_t budget, unsigned jobs, std::optional<int> cap) {
    FaultSpace space(g, strong);
    const int n = space.size();
    EnumerationOutcome out;
    const int last = cap ? std::min(*cap, n) : n;
    for (int t = 0; t <= last; ++t) {
        const std::uint64_t total = binomial(n, t);
        // at the cap a hit is guaranteed, so the scan may stop early
        if (t != last || !cap) {
            if (saturating_add(out.checked, total) > budget)
                throw BudgetExceeded("exact enumeration needs more than " + std::to_string(budget) +
                                     " fault sets (size " + std::to_string(t) + " alone has " +
                                     std::to_string(total) + "); use verify or sample mode");
        }
        std::atomic<std::uint64_t> spent{0};
        auto rank = scan_size(space, t, precluded, jobs, spent, budget - std::min(budget, out.checked));
        if (rank) {
            out.checked += *rank + 1;
            out.witness = space.make(unrank_combination(n, t, *rank));
            return out;
        }
        out.checked += total;
    }
    return out;
}

bool is_preclusion_set(const Graph& g, int k, const FaultSet& f, bool strong) {
    if (k < 1) throw InputError("k must be at least 1");
    if (!strong && !f.vertices().empty()) throw InputError("edge-only preclusion query given a vertex fault");
    return !admits_near_perfect_ikm(delete_faults(g, f), k);
}

PreclusionResult preclusion_number(const Graph& g, const PreclusionQuery& q) {
    if (q.k < 1) throw InputError("k must be at least 1");
    return std::visit(
        [&](const auto& mode) -> PreclusionResult {
            using M = std::decay_t<decltype(mode)>;
            if constexpr (std::is_same_v<M, ExactMode>) return run_exact(g, q);
            else if constexpr (std::is_same_v<M, VerifyMode>) return run_verify(g, q, mode.m);
            else return run_sample(g, q, mode);
        },
        q.mode);
}

FaultSet star_witness(const Graph& g, int k, Vertex v, bool strong) {
    if (k < 2) throw InputError("star witness needs k >= 2");
    Vertex idx = g.index_of(v);
    if (idx < 0) throw InputError("unknown vertex " + std::to_string(v));
    FaultSet f = star_of(g, idx);
    if (!is_preclusion_set(g, k, f, strong))
        throw std::logic_error("star at vertex " + std::to_string(v) + " failed to preclude");
    return f;
}

SpecializedNumbers specialized_numbers(const Graph& g, std::uint64_t budget, unsigned jobs) {
    SpecializedNumbers out;
    auto value_of = [&](int k, bool strong) {
        PreclusionQuery q{k, strong, ExactMode{}, budget, jobs};
        return preclusion_number(g, q).value;
    };
    out.mp = value_of(1, false);
    out.smp = value_of(1, true);
    out.fmp = value_of(2, false);
    auto direct = enumerate_minimum(
        g, false, [](const Graph& h) { return !has_perfect_fractional_matching(h); }, budget, jobs);
    if (direct.witness) out.fmp_direct = static_cast<int>(direct.witness->size());
    return out;
}

}  // namespace ikmp
