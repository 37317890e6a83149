#pragma once

#include <vector>

namespace mealy {

// Strongly connected components of a directed graph given as adjacency
// lists (parallel edges and self-loops allowed).
struct SccResult {
    int count = 0;
    std::vector<int> comp;  // vertex -> component id, ids in reverse topological order
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj);

bool is_strongly_connected_graph(const std::vector<std::vector<int>>& adj);

// Components with no edge leaving them (the recurrent classes when the
// graph is the positive-transition digraph of a stochastic matrix).
std::vector<int> sink_components(const std::vector<std::vector<int>>& adj, const SccResult& scc);

}  // namespace mealy
