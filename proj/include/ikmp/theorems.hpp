// theorems.hpp
//
// Tables of closed-form preclusion values recomputed at desk scale.
//
// Suites:
//     kn           mp^k and smp^k of complete graphs
//     bipartite    odd/even laws on seeded random bipartite graphs
//     arrangement  structure of A(n,s), exact values for A(4,2), star upper
//                  bounds plus sampled lower bounds for A(5,2) and A(5,3)
//     all          the three above
//
// A row passes iff its computed value matches the expected one. Sampled rows
// report "consistent" at best and never count as proved; rows that run out of
// budget are "skipped".

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ikmp/preclusion.hpp"

namespace ikmp {

enum class Provenance { paper, derived };
enum class RowStatus { pass, fail, consistent, skipped };

std::string to_string(Provenance p);
std::string to_string(RowStatus s);

struct TheoremRow {
    std::string theorem;
    std::string instance;
    int k = 0;
    std::string expected;
    std::string computed;
    std::string mode;
    Provenance provenance = Provenance::paper;
    RowStatus status = RowStatus::skipped;
    double elapsed_ms = 0;
};

struct TheoremSuiteReport {
    std::vector<TheoremRow> rows;

    /// No row failed.
    bool passed() const;
    void write_csv(std::ostream& os) const;
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    int k = 3;
    /// complete graphs K_3 .. K_kn_max
    int kn_max = 7;
    int bipartite_graphs = 100;
    int bipartite_max_order = 10;
    std::uint64_t seed = 1;
    std::uint64_t a52_samples = 10'000;
    std::uint64_t a53_samples = 1'000;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 0;
};

/// suite is one of kn, bipartite, arrangement, all. Throws InputError on an
/// unknown suite or when k is not an odd integer >= 3.
TheoremSuiteReport run_theorem_suite(const std::string& suite, const SuiteOptions& options);

/// Closed-form values the complete-graph rows are checked against.
int expected_mp_complete(int n);
int expected_smp_complete(int n);

}  // namespace ikmp
