#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maximal.hpp"

namespace dio {

inline constexpr u64 kDefaultLabelBudget = 1'000'000;

// Outcome of the exact labeling search. verdict none means the whole space
// was exhausted; unknown means the node budget (or wall clock) ran out first.
struct LabelingOutcome {
    enum class Verdict { labeled, none, unknown };

    Verdict verdict = Verdict::none;
    std::vector<std::pair<int, u64>> labeling; // (vertex, label), sorted by vertex
    u64 nodes_expanded = 0;
    int best_depth = 0; // deepest partial assignment reached
};

// True iff labels is a bijection onto the rule's universe and every edge's
// label pair is compatible. ArgumentError when labels is not such a bijection.
bool verify_labeling(const Graph& g, std::span<const u64> labels, const LabelRule& rule);

struct FindOptions {
    u64 node_budget = kDefaultLabelBudget;
    double time_limit_seconds = 0; // 0 = off
};

// Backtracking over vertices in descending-degree order (ties by id); a
// candidate label needs compatibility with all labeled neighbors and enough
// degree in the maximal graph. Labels with identical neighborhoods in the
// maximal graph are interchangeable and assigned in canonical order.
LabelingOutcome find_labeling(const Graph& g, const LabelRule& rule,
                              const FindOptions& opts = {});

// Labeling isomorphism: the unique label-respecting bijection f2^-1 . f1 must
// preserve adjacency and non-adjacency. ArgumentError when the universes
// differ.
bool is_labeling_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Graph on the rule's label positions induced by transporting g along the
// labeling; spanning-subgraph checks against build_maximal_gamma use this.
Graph relabel_to_universe(const Graph& g, std::span<const u64> labels, const LabelRule& rule);

// Certificate as [[vertex,label],...] sorted by vertex.
std::string labeling_to_json(std::span<const std::pair<int, u64>> labeling);
std::vector<std::pair<int, u64>> labeling_from_json(std::string_view text);

std::string to_json(const LabelingOutcome& outcome);

} // namespace dio
