#include "conditions.hpp"

#include <json.hpp>

namespace dio {

namespace {

constexpr int kC1 = 0, kC2 = 1, kC3 = 2, kC4 = 3, kC5 = 4, kC6 = 5;

ConditionEntry compare_le(u64 lhs, u64 rhs) {
    return {lhs <= rhs ? Verdict::pass : Verdict::fail, lhs, rhs, std::nullopt};
}

} // namespace

ConditionReport check_conditions(const PrimeTable& tbl, const Graph& g,
                                 const CheckOptions& opts) {
    const u64 n = static_cast<u64>(g.order());
    if (n > tbl.limit())
        throw RangeError("check_conditions: order past sieve limit");

    ConditionReport rep;
    rep.n = n;

    const DegreeSequence sg = degree_sequence(g);
    const DegreeSequence sd = dn_degree_sequence(n);

    bool failed = false;
    auto done = [&]() { return failed && opts.early_exit; };

    // C1: |E(G)| <= |E(D_n)|
    rep.conditions[kC1] = compare_le(g.edge_count(), dn_edge_count(n));
    failed |= rep.conditions[kC1].verdict == Verdict::fail;

    // C5: delta(G) <= delta(D_n)
    if (!done()) {
        rep.conditions[kC5] = compare_le(min_degree(g), dn_min_degree(n));
        failed |= rep.conditions[kC5].verdict == Verdict::fail;
    }

    // C2: F(G) <= F(D_n)
    if (!done()) {
        rep.conditions[kC2] =
            compare_le(full_degree_count(g), full_degree_count_closed(tbl, n));
        failed |= rep.conditions[kC2].verdict == Verdict::fail;
    }

    // C6: partial sums of the degree sequence dominate D_n's from below.
    if (!done()) {
        ConditionEntry c6;
        c6.verdict = Verdict::pass;
        u64 acc_g = 0, acc_d = 0;
        for (u64 k = 0; k < n; ++k) {
            acc_g += sg.counts[k];
            acc_d += sd.counts[k];
            if (acc_g < acc_d) {
                c6.verdict = Verdict::fail;
                c6.violating_k = k;
                c6.lhs = acc_g;
                c6.rhs = acc_d;
                break;
            }
        }
        if (c6.verdict == Verdict::pass) {
            c6.lhs = acc_g;
            c6.rhs = acc_d;
        }
        rep.conditions[kC6] = c6;
        failed |= c6.verdict == Verdict::fail;
    }

    // C4: alpha(G) >= alpha(D_n). A lower bound already >= the target proves
    // a pass even when the search was cut off.
    ExactResult alpha_res{};
    bool alpha_ran = false;
    if (!done()) {
        ExactOptions ex;
        ex.node_budget = opts.exact_budget;
        ex.order_cap = g.order();
        ex.time_limit_seconds = opts.time_limit_seconds;
        alpha_res = independence_number_exact(g, ex);
        alpha_ran = true;
        rep.nodes_expanded += alpha_res.nodes;
        const u64 target = independence_number_closed(tbl, n);
        ConditionEntry c4;
        c4.lhs = alpha_res.value;
        c4.rhs = target;
        if (static_cast<u64>(alpha_res.value) >= target)
            c4.verdict = Verdict::pass;
        else
            c4.verdict = alpha_res.exact ? Verdict::fail : Verdict::unknown;
        rep.conditions[kC4] = c4;
        failed |= c4.verdict == Verdict::fail;
    }

    // C3: Cl(G) <= Cl(D_n). A lower bound above the target is a sound fail.
    if (!done()) {
        ExactOptions ex;
        ex.node_budget = opts.exact_budget;
        ex.order_cap = g.order();
        ex.time_limit_seconds = opts.time_limit_seconds;
        const ExactResult cl = clique_number_exact(g, ex);
        rep.nodes_expanded += cl.nodes;
        const u64 target = clique_number_closed(tbl, n);
        ConditionEntry c3;
        c3.lhs = cl.value;
        c3.rhs = target;
        if (static_cast<u64>(cl.value) > target)
            c3.verdict = Verdict::fail;
        else
            c3.verdict = cl.exact ? Verdict::pass : Verdict::unknown;
        rep.conditions[kC3] = c3;
        failed |= c3.verdict == Verdict::fail;
    }

    // Sufficiency reuses the alpha search.
    if (!done() && alpha_ran) {
        const u64 required = n - full_degree_count_closed(tbl, n);
        SufficientEntry s;
        s.alpha = alpha_res.value;
        s.required = required;
        if (static_cast<u64>(alpha_res.value) >= required)
            s.verdict = Verdict::pass;
        else
            s.verdict = alpha_res.exact ? Verdict::fail : Verdict::unknown;
        rep.sufficient = s;
    }

    if (failed)
        rep.overall = Overall::not_diophantine;
    else if (rep.sufficient.verdict == Verdict::pass)
        rep.overall = Overall::diophantine;
    else
        rep.overall = Overall::possibly_diophantine;
    return rep;
}

Verdict check_sufficient(const PrimeTable& tbl, const Graph& g, u64 exact_budget) {
    const u64 n = static_cast<u64>(g.order());
    if (n > tbl.limit())
        throw RangeError("check_sufficient: order past sieve limit");
    ExactOptions ex;
    ex.node_budget = exact_budget;
    ex.order_cap = g.order();
    const ExactResult alpha = independence_number_exact(g, ex);
    const u64 required = n - full_degree_count_closed(tbl, n);
    if (static_cast<u64>(alpha.value) >= required)
        return Verdict::pass;
    return alpha.exact ? Verdict::fail : Verdict::unknown;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::unknown:
        return "unknown";
    case Verdict::skipped:
        return "skipped";
    }
    return "?";
}

const char* to_string(Overall o) {
    switch (o) {
    case Overall::possibly_diophantine:
        return "possibly-diophantine";
    case Overall::not_diophantine:
        return "not-diophantine";
    case Overall::diophantine:
        return "diophantine";
    }
    return "?";
}

std::string to_json(const ConditionReport& rep) {
    nlohmann::ordered_json doc;
    doc["n"] = rep.n;
    nlohmann::ordered_json conds;
    static constexpr const char* names[6] = {"C1", "C2", "C3", "C4", "C5", "C6"};
    for (int i = 0; i < 6; ++i) {
        const ConditionEntry& e = rep.conditions[i];
        nlohmann::ordered_json c;
        c["verdict"] = to_string(e.verdict);
        if (e.verdict != Verdict::skipped) {
            c["lhs"] = e.lhs;
            c["rhs"] = e.rhs;
            if (e.violating_k)
                c["violating_k"] = *e.violating_k;
        }
        conds[names[i]] = c;
    }
    doc["conditions"] = conds;
    nlohmann::ordered_json s;
    s["verdict"] = to_string(rep.sufficient.verdict);
    if (rep.sufficient.verdict != Verdict::skipped) {
        s["alpha"] = rep.sufficient.alpha;
        s["required"] = rep.sufficient.required;
    }
    doc["sufficient"] = s;
    doc["overall"] = to_string(rep.overall);
    doc["nodes_expanded"] = rep.nodes_expanded;
    return doc.dump();
}

} // namespace dio
