#include "exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

namespace dio {

namespace {

using Clock = std::chrono::steady_clock;

// Tomita-style max-clique search on a reordered adjacency matrix.
class CliqueSolver {
public:
    CliqueSolver(const Graph& g, const ExactOptions& opts) : opts_(opts) {
        n_ = g.order();
        words_ = (n_ + 63) / 64;

        // Static order: degree descending, ties by original id. Greedy
        // coloring on this order gives tight bounds early.
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });

        std::vector<int> pos(n_ + 1);
        for (int i = 0; i < n_; ++i)
            pos[order[i]] = i;

        adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int u = 1; u <= n_; ++u) {
            g.for_each_neighbor(u, [&](int v) {
                const int a = pos[u], b = pos[v];
                adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= u64{1} << (b & 63);
            });
        }

        if (opts_.time_limit_seconds > 0)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(opts_.time_limit_seconds));
    }

    ExactResult run() {
        std::vector<u64> all(words_, 0);
        for (int i = 0; i < n_; ++i)
            all[i >> 6] |= u64{1} << (i & 63);
        expand(all, 0);
        return {best_, !stopped_, nodes_};
    }

private:
    const ExactOptions& opts_;
    int n_ = 0, words_ = 0;
    std::vector<u64> adj_;
    int best_ = 0;
    u64 nodes_ = 0;
    bool stopped_ = false;
    Clock::time_point deadline_{};

    const u64* row(int i) const { return adj_.data() + static_cast<std::size_t>(i) * words_; }

    bool out_of_budget() {
        if (nodes_ > opts_.node_budget)
            return true;
        if (opts_.time_limit_seconds > 0 && (nodes_ & 1023) == 0 && Clock::now() > deadline_)
            return true;
        return false;
    }

    static int popcount(const u64* w, int words) {
        int c = 0;
        for (int i = 0; i < words; ++i)
            c += std::popcount(w[i]);
        return c;
    }

    void expand(const std::vector<u64>& cand, int size) {
        if (stopped_)
            return;
        ++nodes_;
        if (out_of_budget()) {
            stopped_ = true;
            return;
        }

        const int m = popcount(cand.data(), words_);
        if (m == 0) {
            best_ = std::max(best_, size);
            return;
        }

        // Greedy coloring: vertices of color class c can bound any clique
        // inside cand by c. Emit vertices in nondecreasing color.
        std::vector<int> verts;
        std::vector<int> colors;
        verts.reserve(m);
        colors.reserve(m);
        std::vector<u64> uncolored = cand;
        int color = 0;
        while (true) {
            std::vector<u64> cls = uncolored;
            bool any = false;
            ++color;
            for (int w = 0; w < words_; ++w) {
                while (cls[w]) {
                    const int b = std::countr_zero(cls[w]);
                    const int v = w * 64 + b;
                    cls[w] &= cls[w] - 1;
                    any = true;
                    verts.push_back(v);
                    colors.push_back(color);
                    uncolored[v >> 6] &= ~(u64{1} << (v & 63));
                    // Remove v's neighbors from the current color class.
                    const u64* rv = row(v);
                    for (int x = w; x < words_; ++x)
                        cls[x] &= ~rv[x];
                }
            }
            if (!any)
                break;
            bool empty = true;
            for (int w = 0; w < words_; ++w)
                if (uncolored[w]) {
                    empty = false;
                    break;
                }
            if (empty)
                break;
        }

        std::vector<u64> p = cand;
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (size + colors[i] <= best_)
                return;
            const int v = verts[i];
            std::vector<u64> next(words_);
            const u64* rv = row(v);
            bool empty = true;
            for (int w = 0; w < words_; ++w) {
                next[w] = p[w] & rv[w];
                if (next[w])
                    empty = false;
            }
            if (empty)
                best_ = std::max(best_, size + 1);
            else
                expand(next, size + 1);
            if (stopped_)
                return;
            p[v >> 6] &= ~(u64{1} << (v & 63));
        }
    }
};

} // namespace

ExactResult clique_number_exact(const Graph& g, const ExactOptions& opts) {
    if (g.order() > opts.order_cap)
        throw ArgumentError("clique_number_exact: order " + std::to_string(g.order()) +
                            " above cap " + std::to_string(opts.order_cap) +
                            "; raise order_cap to override");
    CliqueSolver solver(g, opts);
    return solver.run();
}

ExactResult independence_number_exact(const Graph& g, const ExactOptions& opts) {
    if (g.order() > opts.order_cap)
        throw ArgumentError("independence_number_exact: order " + std::to_string(g.order()) +
                            " above cap " + std::to_string(opts.order_cap) +
                            "; raise order_cap to override");
    return clique_number_exact(complement(g), opts);
}

} // namespace dio
