#pragma once

#include <cstdint>

namespace widthlab {

// Resource budgets for the exact solvers.  Every cap is explicit: when a
// budget is exhausted the operation throws Errc::resource_cap instead of
// silently truncating the search.
struct Budget {
    // Backtracking node budget shared by the independence / chromatic /
    // counting / homomorphism searches.
    std::uint64_t search_nodes = 200'000'000;

    // Largest n for the exact subset-DP treewidth (2^n states).
    int treewidth_max_n = 18;

    // Largest n for canonical forms (backtracking colour refinement).
    int canonical_max_n = 16;

    // Largest n for the pebble-game fixpoint (4-bit packed partial maps).
    int consistency_max_n = 16;
    // Cap on the number of partial maps kept by one fixpoint run.
    std::uint64_t consistency_max_family = 50'000'000;

    // Largest n for the colouring-game solver (flat 4^n position table).
    int game_max_n = 12;

    // Default caps for the M^k_r enumerator.
    int enumerate_max_n = 10;
    int enumerate_max_k = 7;
    int enumerate_max_r = 4;

    // Largest n for the exhaustive W(n) survey (2^(n(n-1)/2) bitmasks).
    int survey_max_n = 7;

    // Retries for randomized geometry before RetryExhausted.
    int geometry_retries = 64;

    // Retries for the configuration-model regular-graph sampler.  Rejection
    // is harsh in the dense regime (about 1e-5 acceptance at n=10, d=6), so
    // the ceiling sits far above the expected retry count.
    int regular_graph_retries = 4'000'000;
};

inline const Budget &default_budget() {
    static const Budget b{};
    return b;
}

} // namespace widthlab
