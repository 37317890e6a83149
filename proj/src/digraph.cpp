#include "mealymeasure/digraph.hpp"

#include <algorithm>

namespace mealy {

// Iterative Tarjan.
SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    SccResult res;
    res.comp.assign(n, -1);

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        size_t edge;
    };

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.comp[w] = res.count;
                        if (w == f.v) break;
                    }
                    ++res.count;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return res;
}

bool is_strongly_connected_graph(const std::vector<std::vector<int>>& adj) {
    if (adj.empty()) return true;
    return strongly_connected_components(adj).count == 1;
}

std::vector<int> sink_components(const std::vector<std::vector<int>>& adj, const SccResult& scc) {
    std::vector<bool> has_exit(scc.count, false);
    for (size_t v = 0; v < adj.size(); ++v)
        for (int w : adj[v])
            if (scc.comp[v] != scc.comp[w]) has_exit[scc.comp[v]] = true;
    std::vector<int> sinks;
    for (int c = 0; c < scc.count; ++c)
        if (!has_exit[c]) sinks.push_back(c);
    return sinks;
}

}  // namespace mealy
