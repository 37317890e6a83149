#include "mealymeasure/activity.hpp"

#include <vector>

#include "mealymeasure/digraph.hpp"

namespace mealy {

const char* to_string(ActivityClass c) {
    return c == ActivityClass::Polynomial ? "polynomial" : "exponential";
}

std::set<State> trivial_states(const MealyAutomaton& a) {
    int m = a.alphabet().size();
    std::vector<bool> in_set(a.state_count(), false);
    for (State s = 0; s < a.state_count(); ++s) {
        bool id = true;
        for (Symbol x = 0; x < m; ++x)
            if (a.out(s, x) != x) id = false;
        in_set[s] = id;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (State s = 0; s < a.state_count(); ++s) {
            if (!in_set[s]) continue;
            for (Symbol x = 0; x < m; ++x)
                if (!in_set[a.next(s, x)]) {
                    in_set[s] = false;
                    changed = true;
                    break;
                }
        }
    }
    std::set<State> out;
    for (State s = 0; s < a.state_count(); ++s)
        if (in_set[s]) out.insert(s);
    return out;
}

BigInt activity_count(const MealyAutomaton& a, State g, int n) {
    auto trivial = trivial_states(a);
    // count[s] = number of length-i words w with pi(g, w) = s
    std::vector<BigInt> count(a.state_count(), BigInt(0));
    count[g] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> next(a.state_count(), BigInt(0));
        for (State s = 0; s < a.state_count(); ++s) {
            if (count[s] == 0) continue;
            for (Symbol x = 0; x < a.alphabet().size(); ++x) next[a.next(s, x)] += count[s];
        }
        count.swap(next);
    }
    BigInt total = 0;
    for (State s = 0; s < a.state_count(); ++s)
        if (!trivial.count(s)) total += count[s];
    return total;
}

ActivityClass classify_activity(const MealyAutomaton& a, State g) {
    auto trivial = trivial_states(a);

    std::vector<bool> reachable(a.state_count(), false);
    std::vector<State> stack{g};
    reachable[g] = true;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            State t = a.next(s, x);
            if (!reachable[t]) {
                reachable[t] = true;
                stack.push_back(t);
            }
        }
    }

    // Sub-diagram on nontrivial reachable states, parallel edges kept. A
    // nontrivial state lies on two distinct simple cycles exactly when its
    // SCC holds more intra-SCC edges than vertices.
    std::vector<int> id(a.state_count(), -1);
    std::vector<State> verts;
    for (State s = 0; s < a.state_count(); ++s)
        if (reachable[s] && !trivial.count(s)) {
            id[s] = static_cast<int>(verts.size());
            verts.push_back(s);
        }
    std::vector<std::vector<int>> adj(verts.size());
    for (State s : verts)
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            State t = a.next(s, x);
            if (id[t] != -1) adj[id[s]].push_back(id[t]);
        }

    auto scc = strongly_connected_components(adj);
    std::vector<int> vertex_count(scc.count, 0), edge_count(scc.count, 0);
    for (size_t v = 0; v < adj.size(); ++v) {
        vertex_count[scc.comp[v]]++;
        for (int w : adj[v])
            if (scc.comp[v] == scc.comp[w]) edge_count[scc.comp[v]]++;
    }
    for (int c = 0; c < scc.count; ++c)
        if (edge_count[c] > vertex_count[c]) return ActivityClass::Exponential;
    return ActivityClass::Polynomial;
}

}  // namespace mealy
