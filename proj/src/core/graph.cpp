#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dio {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1)
        throw ArgumentError("graph: order must be >= 1");
    if (n > kMaxOrder)
        throw ResourceError("graph: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxOrder));
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int u) const {
    if (u < 1 || u > n_)
        throw ArgumentError("graph: vertex " + std::to_string(u) + " out of range 1.." +
                            std::to_string(n_));
}

void Graph::check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw ArgumentError("graph: self-loop at vertex " + std::to_string(u));
}

void Graph::set(int u, int v) {
    bits_[static_cast<std::size_t>(u - 1) * words_ + ((v - 1) >> 6)] |= u64{1} << ((v - 1) & 63);
    bits_[static_cast<std::size_t>(v - 1) * words_ + ((u - 1) >> 6)] |= u64{1} << ((u - 1) & 63);
}

void Graph::clear(int u, int v) {
    bits_[static_cast<std::size_t>(u - 1) * words_ + ((v - 1) >> 6)] &= ~(u64{1} << ((v - 1) & 63));
    bits_[static_cast<std::size_t>(v - 1) * words_ + ((u - 1) >> 6)] &= ~(u64{1} << ((u - 1) & 63));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    return (bits_[static_cast<std::size_t>(u - 1) * words_ + ((v - 1) >> 6)] >>
            ((v - 1) & 63)) &
           1;
}

int Graph::degree(int u) const {
    check_vertex(u);
    const u64* r = bits_.data() + static_cast<std::size_t>(u - 1) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(r[w]);
    return d;
}

u64 Graph::edge_count() const {
    u64 twice = 0;
    for (const u64 w : bits_)
        twice += std::popcount(w);
    return twice / 2;
}

std::span<const u64> Graph::row(int u) const {
    check_vertex(u);
    return {bits_.data() + static_cast<std::size_t>(u - 1) * words_,
            static_cast<std::size_t>(words_)};
}

Graph Graph::add_edge(int u, int v) const {
    check_pair(u, v);
    Graph g = *this;
    g.set(u, v);
    return g;
}

Graph Graph::remove_edge(int u, int v) const {
    check_pair(u, v);
    Graph g = *this;
    g.clear(u, v);
    return g;
}

Graph make_null(int n) { return Graph(n); }

Graph make_complete(int n) {
    GraphBuilder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph make_cycle(int n) {
    if (n < 3)
        throw ArgumentError("cycle: order must be >= 3");
    GraphBuilder b(n);
    for (int u = 1; u < n; ++u)
        b.add_edge(u, u + 1);
    b.add_edge(n, 1);
    return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    GraphBuilder b(ng + nh);
    for (int u = 1; u <= ng; ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v)
                b.add_edge(u, v);
        });
    for (int u = 1; u <= nh; ++u)
        h.for_each_neighbor(u, [&](int v) {
            if (u < v)
                b.add_edge(ng + u, ng + v);
        });
    for (int u = 1; u <= ng; ++u)
        for (int v = 1; v <= nh; ++v)
            b.add_edge(u, ng + v);
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
    if (h.order() != g.order())
        return false;
    for (int u = 1; u <= h.order(); ++u) {
        const auto rh = h.row(u);
        const auto rg = g.row(u);
        for (std::size_t w = 0; w < rh.size(); ++w)
            if (rh[w] & ~rg[w])
                return false;
    }
    return true;
}

int min_degree(const Graph& g) {
    int d = g.order();
    for (int u = 1; u <= g.order(); ++u)
        d = std::min(d, g.degree(u));
    return d;
}

int full_degree_count(const Graph& g) {
    int count = 0;
    for (int u = 1; u <= g.order(); ++u)
        if (g.degree(u) == g.order() - 1)
            ++count;
    return count;
}

u64 DegreeSequence::vertex_sum() const {
    u64 s = 0;
    for (u64 c : counts)
        s += c;
    return s;
}

u64 DegreeSequence::weighted_sum() const {
    u64 s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        s += i * counts[i];
    return s;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence s;
    s.counts.assign(g.order(), 0);
    for (int u = 1; u <= g.order(); ++u)
        ++s.counts[g.degree(u)];
    return s;
}

LabeledGraph::LabeledGraph(Graph graph, std::vector<u64> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != graph_.order())
        throw ArgumentError("labeled graph: label count must equal order");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        index_.emplace_back(labels_[i], static_cast<int>(i) + 1);
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 1; i < index_.size(); ++i)
        if (index_[i].first == index_[i - 1].first)
            throw ArgumentError("labeled graph: labels must be injective");
}

u64 LabeledGraph::label_of(int v) const {
    if (v < 1 || v > graph_.order())
        throw ArgumentError("label_of: vertex out of range");
    return labels_[v - 1];
}

int LabeledGraph::vertex_of(u64 label) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(label, 0));
    if (it == index_.end() || it->first != label)
        throw ArgumentError("vertex_of: label " + std::to_string(label) + " not in universe");
    return it->second;
}

} // namespace dio
