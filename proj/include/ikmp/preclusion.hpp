// preclusion.hpp
//
// (Strong) integer k-matching preclusion numbers by fault-set enumeration.
//
// A fault set F precludes G when G - F has neither a perfect nor an almost
// perfect integer k-matching. mp^k(G) is the least |F| over edge-only F,
// smp^k(G) the least |F| over mixed vertex/edge F.
//
// Fault elements are ordered edges first (sorted by (u,v)), then vertices
// (strong queries only); fault sets of one size are enumerated as
// lexicographic combinations over that order. Sizes are scanned upwards and
// the first precluding combination is the reported witness.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ikmp/graph.hpp"

namespace ikmp {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactMode {};

/// Claims the preclusion number is m: every fault set of size m-1 must
/// survive and some size-m set must preclude.
struct VerifyMode {
    int m = 0;
};

/// Tests `count` uniformly random fault sets of size m-1 and looks for a
/// size-m witness. Never proves anything.
struct SampleMode {
    int m = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
};

using PreclusionMode = std::variant<ExactMode, VerifyMode, SampleMode>;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct PreclusionQuery {
    int k = 1;
    bool strong = false;
    PreclusionMode mode = ExactMode{};
    /// Fault sets that may be tested.
    std::uint64_t budget = kDefaultBudget;
    /// Worker threads; 0 means hardware concurrency.
    unsigned jobs = 0;
};

enum class PreclusionStatus {
    proved,
    upper_bound_only,
    sampled_no_counterexample,
    /// a verify/sample claim was contradicted
    refuted,
};

std::string to_string(PreclusionStatus status);

struct PreclusionResult {
    std::optional<int> value;
    /// Minimum-size precluding set (verify/exact), or the size-m upper-bound
    /// witness (sample).
    std::optional<FaultSet> witness;
    /// Precluding set below the claimed size (refuted claims only).
    std::optional<FaultSet> counterexample;
    std::uint64_t checked = 0;
    PreclusionStatus status = PreclusionStatus::upper_bound_only;
};

/// True iff g - F has neither a perfect nor an almost perfect integer
/// k-matching. Throws InputError when F names vertices on a non-strong query
/// or elements missing from g.
bool is_preclusion_set(const Graph& g, int k, const FaultSet& f, bool strong = true);

PreclusionResult preclusion_number(const Graph& g, const PreclusionQuery& q);

/// The edges at v (a label), checked to preclude. Requires k >= 2.
FaultSet star_witness(const Graph& g, int k, Vertex v, bool strong = false);

struct SpecializedNumbers {
    std::optional<int> mp;   // k = 1, edges only
    std::optional<int> smp;  // k = 1, strong
    std::optional<int> fmp;  // k = 2, edges only
    /// fmp recomputed with perfect fractional matching tests directly.
    std::optional<int> fmp_direct;

    bool fmp_consistent() const { return fmp == fmp_direct; }
};

SpecializedNumbers specialized_numbers(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                       unsigned jobs = 0);

/// Shared enumerator: smallest fault set F (in the order above) for which
/// `precluded(g - F)` holds. `cap` is a size known to admit a precluding set.
/// Returns nullopt when no fault set at all qualifies.
struct EnumerationOutcome {
    std::optional<FaultSet> witness;
    std::uint64_t checked = 0;
};

EnumerationOutcome enumerate_minimum(const Graph& g, bool strong,
                                     const std::function<bool(const Graph&)>& precluded,
                                     std::uint64_t budget, unsigned jobs, std::optional<int> cap = {});

/// Unranking helpers, exposed for tests. Combinations of size t out of n in
/// lexicographic order; binomial saturates at UINT64_MAX.
std::uint64_t binomial(int n, int t);
std::vector<int> unrank_combination(int n, int t, std::uint64_t rank);

}  // namespace ikmp
