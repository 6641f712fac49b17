#pragma once

#include "graph.hpp"

namespace dio {

inline constexpr u64 kDefaultExactBudget = 50'000'000; // node expansions
inline constexpr int kDefaultExactOrderCap = 64;

// Result of an exact solver run. When the node budget (or the optional
// wall-clock ceiling) is exhausted, exact=false and value is the best lower
// bound found so far.
struct ExactResult {
    int value = 0;
    bool exact = true;
    u64 nodes = 0;
};

struct ExactOptions {
    u64 node_budget = kDefaultExactBudget;
    int order_cap = kDefaultExactOrderCap; // ArgumentError above this unless raised
    double time_limit_seconds = 0;         // 0 = no wall-clock guard
};

// Maximum clique via branch and bound over bit rows with greedy-coloring
// bounds; deterministic for a given graph and budget.
ExactResult clique_number_exact(const Graph& g, const ExactOptions& opts = {});

// Maximum independent set, solved as a clique search on the complement.
ExactResult independence_number_exact(const Graph& g, const ExactOptions& opts = {});

} // namespace dio
