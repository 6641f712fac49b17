#pragma once

#include <span>
#include <vector>

#include "numtheory.hpp"

namespace dio {

// Finite simple undirected graph on vertices 1..n with packed adjacency bit
// rows. Graphs are immutable values: the mutating operations return copies.
// Bit v-1 of row u is set iff uv is an edge; rows stay symmetric and the
// diagonal stays clear.
class Graph {
public:
    static constexpr int kMaxOrder = 50'000; // adjacency memory guard

    explicit Graph(int n);

    int order() const noexcept { return n_; }
    u64 edge_count() const;

    bool has_edge(int u, int v) const;
    int degree(int u) const;
    std::span<const u64> row(int u) const;
    int words_per_row() const noexcept { return words_; }

    Graph add_edge(int u, int v) const;
    Graph remove_edge(int u, int v) const;

    template <typename F>
    void for_each_neighbor(int u, F&& fn) const {
        check_vertex(u);
        const u64* r = bits_.data() + static_cast<std::size_t>(u - 1) * words_;
        for (int w = 0; w < words_; ++w) {
            u64 word = r[w];
            while (word) {
                const int b = __builtin_ctzll(word);
                word &= word - 1;
                fn(w * 64 + b + 1);
            }
        }
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    int n_;
    int words_;
    std::vector<u64> bits_;

    void check_vertex(int u) const;
    void check_pair(int u, int v) const;
    void set(int u, int v);
    void clear(int u, int v);
};

// Incremental construction without per-edge copies.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    void add_edge(int u, int v) {
        g_.check_pair(u, v);
        g_.set(u, v);
    }

    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

Graph make_null(int n);
Graph make_complete(int n);
Graph make_cycle(int n); // ArgumentError if n < 3

// Disjoint union plus all cross edges; vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

// Same vertex count and E(h) subset of E(g).
bool is_spanning_subgraph(const Graph& h, const Graph& g);

int min_degree(const Graph& g);
int full_degree_count(const Graph& g); // vertices of degree n-1

// counts[i] = number of vertices of degree i, i = 0..n-1.
struct DegreeSequence {
    std::vector<u64> counts;

    u64 vertex_sum() const;   // == order
    u64 weighted_sum() const; // == 2|E|
    bool operator==(const DegreeSequence&) const = default;
};

DegreeSequence degree_sequence(const Graph& g);

// A graph together with a bijective vertex labeling onto an arbitrary finite
// universe; labels()[v-1] is the label of vertex v.
class LabeledGraph {
public:
    LabeledGraph(Graph graph, std::vector<u64> labels);

    const Graph& graph() const noexcept { return graph_; }
    std::span<const u64> labels() const noexcept { return labels_; }
    u64 label_of(int v) const;
    int vertex_of(u64 label) const; // ArgumentError for labels outside the universe

private:
    Graph graph_;
    std::vector<u64> labels_;
    std::vector<std::pair<u64, int>> index_; // sorted by label
};

} // namespace dio
