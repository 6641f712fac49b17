#include "labeler.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include <json.hpp>

namespace dio {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<u64> sorted_universe(const LabelRule& rule) {
    std::vector<u64> u = rule.universe;
    std::sort(u.begin(), u.end());
    return u;
}

class LabelSearch {
public:
    LabelSearch(const Graph& g, const LabelRule& rule, const FindOptions& opts)
        : g_(g), opts_(opts), gamma_(build_maximal_gamma(rule)) {
        n_ = g.order();

        // Vertex order: degree descending, ties by smaller id.
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 1);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });

        // Interchangeable labels: identical neighborhoods in the maximal
        // graph, ignoring the pair itself. Within a class, labels are only
        // usable in ascending index order.
        const Graph& mg = gamma_.graph();
        class_of_.assign(n_ + 1, 0);
        int next_class = 0;
        for (int i = 1; i <= n_; ++i) {
            if (class_of_[i] != 0)
                continue;
            ++next_class;
            class_of_[i] = next_class;
            class_members_.push_back({i});
            for (int j = i + 1; j <= n_; ++j) {
                if (class_of_[j] != 0)
                    continue;
                if (twins(mg, i, j)) {
                    class_of_[j] = next_class;
                    class_members_.back().push_back(j);
                }
            }
        }

        gamma_degree_.assign(n_ + 1, 0);
        for (int i = 1; i <= n_; ++i)
            gamma_degree_[i] = mg.degree(i);

        if (opts_.time_limit_seconds > 0)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(opts_.time_limit_seconds));
    }

    LabelingOutcome run() {
        assigned_.assign(n_ + 1, 0); // vertex -> label index, 0 = unassigned
        used_.assign(n_ + 1, false);
        LabelingOutcome out;
        const bool found = extend(0);
        out.nodes_expanded = nodes_;
        out.best_depth = best_depth_;
        if (found) {
            out.verdict = LabelingOutcome::Verdict::labeled;
            for (int v = 1; v <= n_; ++v)
                out.labeling.emplace_back(v, gamma_.labels()[assigned_[v] - 1]);
        } else {
            out.verdict = stopped_ ? LabelingOutcome::Verdict::unknown
                                   : LabelingOutcome::Verdict::none;
        }
        return out;
    }

private:
    const Graph& g_;
    const FindOptions& opts_;
    LabeledGraph gamma_;
    int n_ = 0;
    std::vector<int> order_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> class_members_;
    std::vector<int> gamma_degree_;
    std::vector<int> assigned_;
    std::vector<bool> used_;
    u64 nodes_ = 0;
    int best_depth_ = 0;
    bool stopped_ = false;
    Clock::time_point deadline_{};

    static bool twins(const Graph& mg, int i, int j) {
        const auto ri = mg.row(i);
        const auto rj = mg.row(j);
        const int words = mg.words_per_row();
        for (int w = 0; w < words; ++w) {
            u64 mask = ~u64{0};
            if (w == (i - 1) / 64)
                mask &= ~(u64{1} << ((i - 1) & 63));
            if (w == (j - 1) / 64)
                mask &= ~(u64{1} << ((j - 1) & 63));
            if ((ri[w] & mask) != (rj[w] & mask))
                return false;
        }
        return true;
    }

    bool out_of_budget() {
        if (nodes_ >= opts_.node_budget)
            return true;
        if (opts_.time_limit_seconds > 0 && (nodes_ & 1023) == 0 && Clock::now() > deadline_)
            return true;
        return false;
    }

    // Label index i is blocked while a smaller unused label of its class
    // exists; interchangeable labels enter the search in a fixed order.
    bool canonical_ok(int i) const {
        for (int m : class_members_[class_of_[i] - 1]) {
            if (m >= i)
                break;
            if (!used_[m])
                return false;
        }
        return true;
    }

    bool extend(int depth) {
        if (depth == n_)
            return true;
        if (stopped_)
            return false;
        const int v = order_[depth];
        const int deg_v = g_.degree(v);
        const Graph& mg = gamma_.graph();
        for (int i = 1; i <= n_; ++i) {
            if (used_[i] || gamma_degree_[i] < deg_v || !canonical_ok(i))
                continue;
            bool ok = true;
            g_.for_each_neighbor(v, [&](int u) {
                if (ok && assigned_[u] != 0 && !mg.has_edge(i, assigned_[u]))
                    ok = false;
            });
            if (!ok)
                continue;
            ++nodes_;
            if (out_of_budget()) {
                stopped_ = true;
                return false;
            }
            assigned_[v] = i;
            used_[i] = true;
            best_depth_ = std::max(best_depth_, depth + 1);
            if (extend(depth + 1))
                return true;
            assigned_[v] = 0;
            used_[i] = false;
            if (stopped_)
                return false;
        }
        return false;
    }
};

} // namespace

bool verify_labeling(const Graph& g, std::span<const u64> labels, const LabelRule& rule) {
    if (static_cast<int>(labels.size()) != g.order())
        throw ArgumentError("verify_labeling: one label per vertex required");
    if (labels.size() != rule.universe.size())
        throw ArgumentError("verify_labeling: labeling must cover the whole universe");
    std::vector<u64> seen(labels.begin(), labels.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ArgumentError("verify_labeling: labels must be injective");
    if (seen != sorted_universe(rule))
        throw ArgumentError("verify_labeling: labels must be onto the universe");

    for (int u = 1; u <= g.order(); ++u) {
        bool ok = true;
        g.for_each_neighbor(u, [&](int v) {
            if (u < v && ok && !rule.compatible(labels[u - 1], labels[v - 1]))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

LabelingOutcome find_labeling(const Graph& g, const LabelRule& rule, const FindOptions& opts) {
    if (static_cast<std::size_t>(g.order()) != rule.universe.size())
        throw ArgumentError("find_labeling: graph order must equal universe size");
    LabelSearch search(g, rule, opts);
    return search.run();
}

bool is_labeling_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    std::vector<u64> ua(a.labels().begin(), a.labels().end());
    std::vector<u64> ub(b.labels().begin(), b.labels().end());
    std::sort(ua.begin(), ua.end());
    std::sort(ub.begin(), ub.end());
    if (ua != ub)
        throw ArgumentError("is_labeling_isomorphic: label universes differ");

    const int n = a.graph().order();
    // phi = f2^-1 . f1 is the only candidate map.
    std::vector<int> phi(n + 1);
    for (int u = 1; u <= n; ++u)
        phi[u] = b.vertex_of(a.label_of(u));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (a.graph().has_edge(u, v) != b.graph().has_edge(phi[u], phi[v]))
                return false;
    return true;
}

Graph relabel_to_universe(const Graph& g, std::span<const u64> labels, const LabelRule& rule) {
    if (static_cast<int>(labels.size()) != g.order())
        throw ArgumentError("relabel_to_universe: one label per vertex required");
    std::vector<u64> uni = rule.universe;
    std::vector<int> pos;
    GraphBuilder b(g.order());
    auto index_of = [&](u64 label) {
        auto it = std::find(uni.begin(), uni.end(), label);
        if (it == uni.end())
            throw ArgumentError("relabel_to_universe: label outside universe");
        return static_cast<int>(it - uni.begin()) + 1;
    };
    for (int u = 1; u <= g.order(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v)
                b.add_edge(index_of(labels[u - 1]), index_of(labels[v - 1]));
        });
    return std::move(b).build();
}

std::string labeling_to_json(std::span<const std::pair<int, u64>> labeling) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::vector<std::pair<int, u64>> sorted(labeling.begin(), labeling.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [v, l] : sorted)
        arr.push_back({v, l});
    return arr.dump();
}

std::vector<std::pair<int, u64>> labeling_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("labeling: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    if (!doc.is_array())
        throw ParseError("labeling: expected [[vertex,label],...]", 1, 1);
    std::vector<std::pair<int, u64>> out;
    for (const auto& e : doc) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || e[1].get<i64>() < 0)
            throw ParseError("labeling: each entry must be [vertex,label]", 1, 1);
        out.emplace_back(e[0].get<int>(), e[1].get<u64>());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_json(const LabelingOutcome& outcome) {
    nlohmann::ordered_json doc;
    switch (outcome.verdict) {
    case LabelingOutcome::Verdict::labeled:
        doc["verdict"] = "labeled";
        break;
    case LabelingOutcome::Verdict::none:
        doc["verdict"] = "none";
        break;
    case LabelingOutcome::Verdict::unknown:
        doc["verdict"] = "unknown";
        break;
    }
    if (outcome.verdict == LabelingOutcome::Verdict::labeled) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [v, l] : outcome.labeling)
            arr.push_back({v, l});
        doc["labeling"] = arr;
    }
    doc["nodes_expanded"] = outcome.nodes_expanded;
    doc["best_depth"] = outcome.best_depth;
    return doc.dump();
}

} // namespace dio
