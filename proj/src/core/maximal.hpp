#pragma once

#include <functional>
#include <optional>

#include "exact.hpp"
#include "graph.hpp"
#include "numtheory.hpp"

namespace dio {

inline constexpr u64 kDefaultBuildCap = 20'000;

// A gamma-labeling instance: a finite label universe plus a symmetric
// pair-compatibility predicate. Two vertices of the maximal graph are
// adjacent exactly when their labels are compatible.
struct LabelRule {
    std::vector<u64> universe;
    std::function<bool(u64, u64)> compatible;
};

LabelRule diophantine_rule(u64 n); // universe 1..n, gcd(a,b) | n
LabelRule coprime_rule(u64 n);     // universe 1..n, gcd(a,b) == 1

// The maximal Diophantine graph D_n: identity labels 1..n, edge iff
// gcd(u,v) | n. ResourceError when n exceeds the cap.
LabeledGraph build_dn(u64 n, u64 cap = kDefaultBuildCap);

// Maximal gamma-labeled graph for an arbitrary rule: one vertex per label,
// edge exactly where the predicate accepts the pair.
LabeledGraph build_maximal_gamma(const LabelRule& rule);

// A prime p whose critical prime power divides both a and b, if one exists;
// nonempty exactly when gcd(a,b) does not divide n.
std::optional<u64> nonadjacency_witness(u64 n, u64 a, u64 b);

// Label has full degree in D_n iff it divides n XOR it is a critical prime
// power strictly between n/2 and n.
bool is_full_degree_label(u64 n, u64 a);

// F(D_n) by inclusion-exclusion over critical prime powers below n/2.
u64 full_degree_count_ie(const PrimeTable& tbl, u64 n);

// F(D_n) = tau(n) + pi(n-1) - pi(n/2) + gamma_{n/2}(n).
u64 full_degree_count_closed(const PrimeTable& tbl, u64 n);

// Cl(D_n) = tau(n) + pi(n) - omega(n) + gamma_1(n).
u64 clique_number_closed(const PrimeTable& tbl, u64 n);

// alpha(D_n) = max over primes p <= n of floor(n / p^(v_p(n)+1)); 1 for n=1.
u64 independence_number_closed(const PrimeTable& tbl, u64 n);

// D_n is complete iff every prime p <= n/2 divides n with critical power
// above n/2.
bool is_complete_dn(const PrimeTable& tbl, u64 n);

u64 reduced_label(u64 n, u64 a); // a / gcd(a, n)

// Degree of the vertex labeled a in D_n: n-1 when the reduced label is 1,
// else inclusion-exclusion over the critical powers of its prime factors.
u64 degree_of_label(u64 n, u64 a);

u64 dn_min_degree(u64 n);            // delta(D_n) by scanning degree_of_label
u64 dn_edge_count(u64 n);            // half the degree sum
DegreeSequence dn_degree_sequence(u64 n);

// Minimum-degree vertex with minimum label, per the critical-prime-power
// product formula, cross-checked against a scan of all label degrees.
struct MinLabelResult {
    enum class Status {
        ok,               // formula and scan agree
        complete,         // D_n complete: f(u_0) = 1, every vertex has min degree
        theorem_mismatch, // formula disagrees with the scan (never expected)
    };

    Status status = Status::ok;
    u64 min_label = 0;          // f(u_0)
    u64 witness_high_label = 0; // min-degree label in (n/2, n)
    int factor_count = 0;       // r, number of critical prime power factors
    u64 min_degree = 0;         // delta(D_n)
    u64 scan_min_label = 0;     // what the brute-force scan found
};

MinLabelResult min_degree_min_label(const PrimeTable& tbl, u64 n);

// One row of the D_n bounds table.
struct DnProfile {
    u64 n = 0;
    u64 edge_count = 0;
    u64 full_degree_count = 0;
    u64 clique_number = 0;
    u64 independence_number = 0;
    u64 min_degree = 0;
    DegreeSequence degree_sequence;
};

struct ProfileOptions {
    u64 audit_cap = 120;    // run exact solvers and a full build below this
    bool force_audit = false;
    u64 exact_budget = kDefaultExactBudget;
};

// Closed-form profile; when audited, every field is cross-checked against
// the constructed graph and the exact solvers (InternalError on mismatch).
DnProfile profile(const PrimeTable& tbl, u64 n, const ProfileOptions& opts = {});

} // namespace dio
