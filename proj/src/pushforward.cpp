#include "mealymeasure/pushforward.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mealymeasure/activity.hpp"
#include "mealymeasure/errors.hpp"

namespace mealy {

Rational pushforward_cylinder(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                              const Word& w) {
    if (w.empty()) return 1;
    int m = a.alphabet().size();
    const auto& l = mu.initial();
    const auto& L = mu.matrix();

    // weight[(s', x)]: mass of preimage paths ending in state s' whose last
    // input was x.
    std::vector<Rational> weight(a.pair_count(), Rational(0));
    for (Symbol x = 0; x < m; ++x)
        if (a.out(g, x) == w[0] && l[x] != 0) weight[a.pair_index(a.next(g, x), x)] += l[x];

    for (size_t j = 1; j < w.size(); ++j) {
        std::vector<Rational> next(a.pair_count(), Rational(0));
        for (State s = 0; s < a.state_count(); ++s)
            for (Symbol xp = 0; xp < m; ++xp) {
                const Rational& acc = weight[a.pair_index(s, xp)];
                if (acc == 0) continue;
                for (Symbol x = 0; x < m; ++x)
                    if (a.out(s, x) == w[j] && L.at(xp, x) != 0)
                        next[a.pair_index(a.next(s, x), x)] += acc * L.at(xp, x);
            }
        weight.swap(next);
    }

    Rational total = 0;
    for (const auto& acc : weight) total += acc;
    return total;
}

namespace {

VMaxEnumeration enumerate_vmax_impl(const MealyAutomaton& a, State g, int depth,
                                    const MarkovMeasure* mu) {
    if (depth < 1) throw PreconditionError("enumerate_vmax: depth must be at least 1");
    auto trivial = trivial_states(a);
    int m = a.alphabet().size();

    VMaxEnumeration out;
    out.depth = depth;

    struct Node {
        Word word;
        std::set<State> states;
    };
    std::deque<Node> queue;
    queue.push_back({{}, {g}});

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();

        if (!node.word.empty()) {
            bool all_trivial = true;
            for (State s : node.states)
                if (!trivial.count(s)) all_trivial = false;
            if (all_trivial) {
                out.members.push_back(node.word);
                continue;
            }
            if (static_cast<int>(node.word.size()) == depth) {
                out.frontier.push_back({node.word, {node.states.begin(), node.states.end()}});
                continue;
            }
        }

        for (Symbol y = 0; y < m; ++y) {
            Node child;
            child.word = node.word;
            child.word.push_back(y);
            for (State s : node.states)
                for (Symbol x = 0; x < m; ++x)
                    if (a.out(s, x) == y) child.states.insert(a.next(s, x));
            queue.push_back(std::move(child));
        }
    }

    if (mu) {
        Rational covered = 0;
        for (const auto& w : out.members) covered += cylinder_measure(*mu, w);
        out.covered_mass = covered;
    }
    return out;
}

}  // namespace

VMaxEnumeration enumerate_vmax(const MealyAutomaton& a, State g, int depth) {
    return enumerate_vmax_impl(a, g, depth, nullptr);
}

VMaxEnumeration enumerate_vmax(const MealyAutomaton& a, State g, int depth,
                               const MarkovMeasure& mu) {
    return enumerate_vmax_impl(a, g, depth, &mu);
}

RadonNikodymTable radon_nikodym(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                int depth) {
    if (classify_activity(a, g) != ActivityClass::Polynomial)
        throw PreconditionError(
            "radon_nikodym: state has exponential activity; the truncated density table is only "
            "defined for polynomial activity");
    if (!is_non_atomic(mu))
        throw PreconditionError("radon_nikodym: measure has an atom");

    VMaxEnumeration vmax = enumerate_vmax(a, g, depth, mu);

    RadonNikodymTable table;
    table.depth = depth;
    table.complete = vmax.complete();
    table.residual_mass = Rational(1) - *vmax.covered_mass;

    for (const auto& w : vmax.members) {
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            Word wx = w;
            wx.push_back(x);
            Rational base = cylinder_measure(mu, wx);
            Rational push = pushforward_cylinder(a, g, mu, wx);
            if (base == 0) {
                if (push != 0)
                    throw PreconditionError(
                        "radon_nikodym: pushforward charges the mu-null cylinder '" +
                        word_to_string(mu.alphabet(), wx) +
                        "'; the image measure is not absolutely continuous");
                continue;
            }
            table.entries.push_back({std::move(wx), push / base});
        }
    }
    return table;
}

bool check_abs_continuity_sufficient(const MealyAutomaton& a, State g, const MarkovMeasure& mu) {
    const auto& l = mu.initial();
    const auto& L = mu.matrix();
    int m = a.alphabet().size();

    bool all_positive = l.positive();
    for (int x = 0; x < m && all_positive; ++x)
        for (int y = 0; y < m; ++y)
            if (L.at(x, y) == 0) {
                all_positive = false;
                break;
            }
    if (all_positive) return true;

    for (Symbol x = 0; x < m; ++x)
        if (l[a.out(g, x)] == 0 && l[x] != 0) return false;
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < m; ++x)
            for (Symbol y = 0; y < m; ++y)
                if (L.at(a.out(s, x), a.out(a.next(s, x), y)) == 0 && L.at(x, y) != 0)
                    return false;
    return true;
}

}  // namespace mealy
