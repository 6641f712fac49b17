#pragma once

#include <array>
#include <optional>
#include <string>

#include "maximal.hpp"

namespace dio {

enum class Verdict { pass, fail, unknown, skipped };

// One necessary condition: the compared values and the outcome. For C3/C4
// under an exhausted budget, lhs holds the best exact bound found.
struct ConditionEntry {
    Verdict verdict = Verdict::skipped;
    u64 lhs = 0;
    u64 rhs = 0;
    std::optional<u64> violating_k; // C6: smallest k with a violated partial sum
};

struct SufficientEntry {
    Verdict verdict = Verdict::skipped;
    u64 alpha = 0;
    u64 required = 0; // n - F(D_n)
};

enum class Overall { possibly_diophantine, not_diophantine, diophantine };

// Verdicts for C1..C6 of the order-matched D_n comparison plus the
// sufficiency test. overall is not_diophantine iff some condition fails and
// diophantine only when the sufficient condition passes.
struct ConditionReport {
    u64 n = 0;
    std::array<ConditionEntry, 6> conditions; // C1..C6
    SufficientEntry sufficient;
    Overall overall = Overall::possibly_diophantine;
    u64 nodes_expanded = 0; // exact-solver work
};

struct CheckOptions {
    u64 exact_budget = kDefaultExactBudget;
    double time_limit_seconds = 0;
    bool early_exit = false; // stop at the first failing condition
};

// Evaluates in cost order C1, C5, C2, C6, C4, C3. Budget exhaustion yields
// unknown verdicts (with sound bound-based pass/fail where possible), never
// a spurious fail.
ConditionReport check_conditions(const PrimeTable& tbl, const Graph& g,
                                 const CheckOptions& opts = {});

// Thm: alpha(G) >= n - F(D_n) forces a Diophantine labeling to exist.
Verdict check_sufficient(const PrimeTable& tbl, const Graph& g,
                         u64 exact_budget = kDefaultExactBudget);

// Stable key order, no locale dependence; identical inputs give identical
// bytes.
std::string to_json(const ConditionReport& report);

const char* to_string(Verdict v);
const char* to_string(Overall o);

} // namespace dio
