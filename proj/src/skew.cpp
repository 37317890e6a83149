#include "mealymeasure/skew.hpp"

#include "mealymeasure/errors.hpp"

namespace mealy {

StochasticMatrix build_T(const StochasticMatrix& L, const MealyAutomaton& a) {
    if (L.size() != a.alphabet().size())
        throw PreconditionError("build_T: matrix does not match the automaton alphabet");
    int m = a.alphabet().size();
    int np = a.pair_count();
    std::vector<Rational> e(static_cast<size_t>(np) * np, Rational(0));
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < m; ++x) {
            int row = a.pair_index(s, x);
            State sp = a.next(s, x);
            for (Symbol xp = 0; xp < m; ++xp)
                e[static_cast<size_t>(row) * np + a.pair_index(sp, xp)] = L.at(x, xp);
        }
    return StochasticMatrix(np, std::move(e));
}

StochasticMatrix build_K(const ProbVector& l, const MealyAutomaton& a) {
    if (l.size() != a.alphabet().size())
        throw PreconditionError("build_K: vector does not match the automaton alphabet");
    int n = a.state_count();
    std::vector<Rational> e(static_cast<size_t>(n) * n, Rational(0));
    for (State s = 0; s < n; ++s)
        for (Symbol x = 0; x < a.alphabet().size(); ++x) e[s * n + a.next(s, x)] += l[x];
    return StochasticMatrix(n, std::move(e));
}

SkewChain make_skew_chain(const MealyAutomaton& a, const MarkovMeasure& mu) {
    if (a.alphabet() != mu.alphabet())
        throw PreconditionError("automaton and chain alphabets differ");
    SkewChain sc{a, mu, build_T(mu.matrix(), a), build_K(mu.initial(), a), {}, {}, {}, {}};
    auto tc = recurrent_classes(sc.T);
    if (tc.size() == 1)
        sc.t = stationary_vector(sc.T);
    else
        sc.t_classes = std::move(tc);
    auto kc = recurrent_classes(sc.K);
    if (kc.size() == 1)
        sc.k = stationary_vector(sc.K);
    else
        sc.k_classes = std::move(kc);
    return sc;
}

bool is_L_strongly_connected(const MealyAutomaton& a, const StochasticMatrix& L) {
    return is_irreducible(build_T(L, a));
}

bool tensor_decomposes(const ProbVector& t, const ProbVector& k, const ProbVector& l) {
    if (t.size() != k.size() * l.size())
        throw PreconditionError("tensor_decomposes: incompatible index sets");
    for (int s = 0; s < k.size(); ++s)
        for (int x = 0; x < l.size(); ++x)
            if (t[s * l.size() + x] != k[s] * l[x]) return false;
    return true;
}

bool tensor_decomposes(const SkewChain& sc) {
    if (!sc.t || !sc.k) return false;
    return tensor_decomposes(*sc.t, *sc.k, sc.chain.initial());
}

Rational skew_cylinder_measure(const StochasticMatrix& T, const ProbVector& t,
                               const std::vector<int>& pair_path) {
    if (pair_path.empty()) return 1;
    Rational r = t[pair_path[0]];
    for (size_t i = 1; i < pair_path.size() && r != 0; ++i)
        r *= T.at(pair_path[i - 1], pair_path[i]);
    return r;
}

}  // namespace mealy
