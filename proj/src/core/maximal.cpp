#include "maximal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dio {

namespace {

void check_label_in_range(u64 n, u64 a, const char* who) {
    if (a < 1 || a > n)
        throw ArgumentError(std::string(who) + ": label " + std::to_string(a) +
                            " outside 1.." + std::to_string(n));
}

// Critical prime powers p^(v_p(n)+1) over all primes p <= bound, ascending by
// value. For p not dividing n this is p itself.
std::vector<u64> critical_powers_upto(const PrimeTable& tbl, u64 n, u64 bound) {
    std::vector<u64> qs;
    for (u32 p : tbl.primes_upto(bound)) {
        u64 q = p;
        while (n % q == 0)
            q *= p;
        if (q <= bound)
            qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    return qs;
}

// Signed inclusion-exclusion count of labels in 1..n divisible by at least
// one of the pairwise-coprime moduli qs.
u64 multiples_of_any(u64 n, std::span<const u64> qs) {
    u64 covered = 0;
    // Depth-first over subsets with product pruning; qs are pairwise coprime
    // prime powers so the lcm of a subset is its product.
    std::function<void(std::size_t, u64, int)> walk = [&](std::size_t i, u64 prod, int depth) {
        for (std::size_t j = i; j < qs.size(); ++j) {
            if (qs[j] > n / prod)
                break; // product would exceed n; floor terms vanish
            const u64 next = prod * qs[j];
            const u64 term = n / next;
            covered += (depth % 2 == 0) ? term : -term;
            walk(j + 1, next, depth + 1);
        }
    };
    walk(0, 1, 0);
    return covered;
}

} // namespace

LabelRule diophantine_rule(u64 n) {
    if (n < 1)
        throw ArgumentError("diophantine_rule: n must be >= 1");
    LabelRule rule;
    rule.universe.resize(n);
    std::iota(rule.universe.begin(), rule.universe.end(), u64{1});
    rule.compatible = [n](u64 a, u64 b) { return n % std::gcd(a, b) == 0; };
    return rule;
}

LabelRule coprime_rule(u64 n) {
    if (n < 1)
        throw ArgumentError("coprime_rule: n must be >= 1");
    LabelRule rule;
    rule.universe.resize(n);
    std::iota(rule.universe.begin(), rule.universe.end(), u64{1});
    rule.compatible = [](u64 a, u64 b) { return std::gcd(a, b) == 1; };
    return rule;
}

LabeledGraph build_dn(u64 n, u64 cap) {
    if (n < 1)
        throw ArgumentError("build_dn: n must be >= 1");
    if (n > cap)
        throw ResourceError("build_dn: n " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    GraphBuilder b(static_cast<int>(n));
    for (u64 u = 1; u <= n; ++u)
        for (u64 v = u + 1; v <= n; ++v)
            if (n % std::gcd(u, v) == 0)
                b.add_edge(static_cast<int>(u), static_cast<int>(v));
    std::vector<u64> labels(n);
    std::iota(labels.begin(), labels.end(), u64{1});
    return {std::move(b).build(), std::move(labels)};
}

LabeledGraph build_maximal_gamma(const LabelRule& rule) {
    const auto& xs = rule.universe;
    if (xs.empty())
        throw ArgumentError("build_maximal_gamma: empty universe");
    if (!rule.compatible)
        throw ArgumentError("build_maximal_gamma: missing predicate");
    const int n = static_cast<int>(xs.size());
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rule.compatible(xs[i], xs[j]))
                b.add_edge(i + 1, j + 1);
    return {std::move(b).build(), xs};
}

std::optional<u64> nonadjacency_witness(u64 n, u64 a, u64 b) {
    if (n < 1)
        throw ArgumentError("nonadjacency_witness: n must be >= 1");
    check_label_in_range(n, a, "nonadjacency_witness");
    check_label_in_range(n, b, "nonadjacency_witness");
    if (a == b)
        throw ArgumentError("nonadjacency_witness: labels must differ");
    const u64 g = std::gcd(a, b);
    if (g == 1)
        return std::nullopt;
    // p^(v_p(n)+1) divides both a and b iff v_p(gcd) > v_p(n).
    for (const auto& pp : factorize(g).factors) {
        u64 m = n;
        int vn = 0;
        while (m % pp.prime == 0) {
            m /= pp.prime;
            ++vn;
        }
        if (pp.exponent > vn)
            return pp.prime;
    }
    return std::nullopt;
}

bool is_full_degree_label(u64 n, u64 a) {
    if (n < 1)
        throw ArgumentError("is_full_degree_label: n must be >= 1");
    check_label_in_range(n, a, "is_full_degree_label");
    const bool divides = (n % a == 0);
    bool high_critical = false;
    if (2 * a > n && a < n) {
        const auto f = factorize(a);
        if (f.factors.size() == 1) {
            const u64 p = f.factors[0].prime;
            high_critical = (f.factors[0].exponent == valuation(p, n) + 1);
        }
    }
    if (divides && high_critical)
        throw InternalError("is_full_degree_label: divisor and critical power overlap");
    return divides != high_critical;
}

u64 full_degree_count_ie(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("full_degree_count_ie: n must be >= 1");
    // Critical powers strictly below n/2, i.e. q <= (n-1)/2.
    const std::vector<u64> qs = critical_powers_upto(tbl, n, (n - 1) / 2);
    return n - multiples_of_any(n, qs);
}

u64 full_degree_count_closed(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("full_degree_count_closed: n must be >= 1");
    if (n == 1)
        return 1;
    // pi(n/2) evaluated at floor(n/2): a prime equal to n/2 is excluded from
    // the open interval (n/2, n) exactly as required.
    return tau(n) + tbl.prime_pi(n - 1) - tbl.prime_pi(n / 2) + gamma_x(n, 2, n);
}

u64 clique_number_closed(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("clique_number_closed: n must be >= 1");
    if (n == 1)
        return 1;
    return tau(n) + tbl.prime_pi(n) - omega(n) + gamma_x(1, 1, n);
}

u64 independence_number_closed(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("independence_number_closed: n must be >= 1");
    if (n == 1)
        return 1;
    u64 best = 0;
    for (u32 p : tbl.primes_upto(n)) {
        u64 q = p;
        while (n % q == 0)
            q *= p;
        best = std::max(best, n / q);
    }
    return best;
}

bool is_complete_dn(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("is_complete_dn: n must be >= 1");
    for (u32 p : tbl.primes_upto(n / 2)) {
        if (n % p != 0)
            return false;
        u64 q = p;
        while (n % q == 0)
            q *= p;
        if (2 * q <= n)
            return false;
    }
    return true;
}

u64 reduced_label(u64 n, u64 a) {
    if (n < 1)
        throw ArgumentError("reduced_label: n must be >= 1");
    check_label_in_range(n, a, "reduced_label");
    return a / std::gcd(a, n);
}

u64 degree_of_label(u64 n, u64 a) {
    if (n < 1)
        throw ArgumentError("degree_of_label: n must be >= 1");
    check_label_in_range(n, a, "degree_of_label");
    const u64 fstar = a / std::gcd(a, n);
    if (fstar == 1)
        return n - 1;
    // Non-neighbors of a are the labels divisible by some critical power of a
    // prime of the reduced label; a itself is among them.
    std::vector<u64> qs;
    for (const auto& pp : factorize(fstar).factors) {
        u64 q = pp.prime;
        while (n % q == 0)
            q *= pp.prime;
        qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    return n - multiples_of_any(n, qs);
}

u64 dn_min_degree(u64 n) {
    if (n < 1)
        throw ArgumentError("dn_min_degree: n must be >= 1");
    u64 d = n - 1;
    for (u64 a = 2; a <= n; ++a)
        d = std::min(d, degree_of_label(n, a));
    return d;
}

u64 dn_edge_count(u64 n) {
    if (n < 1)
        throw ArgumentError("dn_edge_count: n must be >= 1");
    u64 sum = 0;
    for (u64 a = 1; a <= n; ++a)
        sum += degree_of_label(n, a);
    return sum / 2;
}

DegreeSequence dn_degree_sequence(u64 n) {
    if (n < 1)
        throw ArgumentError("dn_degree_sequence: n must be >= 1");
    DegreeSequence s;
    s.counts.assign(n, 0);
    for (u64 a = 1; a <= n; ++a)
        ++s.counts[degree_of_label(n, a)];
    return s;
}

MinLabelResult min_degree_min_label(const PrimeTable& tbl, u64 n) {
    if (n < 1)
        throw ArgumentError("min_degree_min_label: n must be >= 1");
    MinLabelResult r;
    if (is_complete_dn(tbl, n)) {
        r.status = MinLabelResult::Status::complete;
        r.min_label = 1;
        r.min_degree = n - 1;
        r.scan_min_label = 1;
        return r;
    }

    // Product of the ascending critical prime powers below n/2, extended
    // while it stays below n. The next power would push it past n (it is at
    // least n/2, so this holds even when the sequence is exhausted).
    const std::vector<u64> qs = critical_powers_upto(tbl, n, (n - 1) / 2);
    u64 product = 1;
    int taken = 0;
    for (u64 q : qs) {
        if (product > (n - 1) / q)
            break;
        product *= q;
        ++taken;
    }
    r.min_label = product;
    r.factor_count = taken;

    // Scan all labels for the true minimum degree and its least label.
    u64 delta = n - 1;
    u64 least = 1;
    for (u64 a = 1; a <= n; ++a) {
        const u64 d = degree_of_label(n, a);
        if (d < delta) {
            delta = d;
            least = a;
        }
    }
    r.min_degree = delta;
    r.scan_min_label = least;
    if (least != product) {
        r.status = MinLabelResult::Status::theorem_mismatch;
        return r;
    }

    // Double into (n/2, n); lands strictly inside because the label has a
    // critical-power factor and so never divides n.
    u64 w = product;
    while (2 * w <= n)
        w *= 2;
    r.witness_high_label = w;
    r.status = MinLabelResult::Status::ok;
    return r;
}

DnProfile profile(const PrimeTable& tbl, u64 n, const ProfileOptions& opts) {
    if (n < 1)
        throw ArgumentError("profile: n must be >= 1");
    if (n > tbl.limit())
        throw RangeError("profile: n past sieve limit");

    DnProfile p;
    p.n = n;
    p.degree_sequence.counts.assign(n, 0);
    u64 degree_sum = 0;
    u64 delta = n - 1;
    for (u64 a = 1; a <= n; ++a) {
        const u64 d = degree_of_label(n, a);
        ++p.degree_sequence.counts[d];
        degree_sum += d;
        delta = std::min(delta, d);
    }
    p.edge_count = degree_sum / 2;
    p.min_degree = delta;
    p.full_degree_count = full_degree_count_closed(tbl, n);
    p.clique_number = clique_number_closed(tbl, n);
    p.independence_number = independence_number_closed(tbl, n);

    if (opts.force_audit || n <= opts.audit_cap) {
        const LabeledGraph dn = build_dn(n);
        const Graph& g = dn.graph();
        if (g.edge_count() != p.edge_count)
            throw InternalError("profile audit: edge count mismatch at n=" + std::to_string(n));
        if (degree_sequence(g) != p.degree_sequence)
            throw InternalError("profile audit: degree sequence mismatch at n=" +
                                std::to_string(n));
        if (static_cast<u64>(full_degree_count(g)) != p.full_degree_count ||
            full_degree_count_ie(tbl, n) != p.full_degree_count)
            throw InternalError("profile audit: full-degree mismatch at n=" + std::to_string(n));
        ExactOptions ex;
        ex.node_budget = opts.exact_budget;
        ex.order_cap = static_cast<int>(n);
        const ExactResult cl = clique_number_exact(g, ex);
        const ExactResult al = independence_number_exact(g, ex);
        if (!cl.exact || static_cast<u64>(cl.value) != p.clique_number)
            throw InternalError("profile audit: clique mismatch at n=" + std::to_string(n));
        if (!al.exact || static_cast<u64>(al.value) != p.independence_number)
            throw InternalError("profile audit: independence mismatch at n=" + std::to_string(n));
    }
    return p;
}

} // namespace dio
