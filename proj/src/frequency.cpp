#include "mealymeasure/frequency.hpp"

#include <algorithm>
#include <stdexcept>

#include "mealymeasure/errors.hpp"

namespace mealy {

namespace {

void require_l_strongly_connected(const SkewChain& sc) {
    if (!is_irreducible(sc.T))
        throw PreconditionError(
            "automaton is not L-strongly connected: asymptotic output frequencies are not "
            "determined by a unique positive stationary vector of the skew chain");
}

}  // namespace

Rational output_word_frequency(const SkewChain& sc, const Word& u) {
    if (u.empty()) throw std::invalid_argument("word frequency needs a nonempty word");
    require_l_strongly_connected(sc);
    const MealyAutomaton& a = sc.automaton;
    const StochasticMatrix& L = sc.chain.matrix();
    int m = a.alphabet().size();
    const auto& t = sc.t->entries();

    // weight[(s', x)] accumulates path mass where s' is the current state
    // and x the input consumed last.
    std::vector<Rational> weight(a.pair_count(), Rational(0));
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < m; ++x)
            if (a.out(s, x) == u[0]) weight[a.pair_index(a.next(s, x), x)] += t[a.pair_index(s, x)];

    for (size_t j = 1; j < u.size(); ++j) {
        std::vector<Rational> next(a.pair_count(), Rational(0));
        for (State s = 0; s < a.state_count(); ++s)
            for (Symbol xp = 0; xp < m; ++xp) {
                const Rational& w = weight[a.pair_index(s, xp)];
                if (w == 0) continue;
                for (Symbol x = 0; x < m; ++x)
                    if (a.out(s, x) == u[j] && L.at(xp, x) != 0)
                        next[a.pair_index(a.next(s, x), x)] += w * L.at(xp, x);
            }
        weight.swap(next);
    }

    Rational total = 0;
    for (const auto& w : weight) total += w;
    return total;
}

Rational output_letter_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                 Symbol x) {
    (void)g;  // the limit does not depend on the acting state
    return output_word_frequency(make_skew_chain(a, mu), Word{x});
}

Rational output_word_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                               const Word& u) {
    (void)g;
    return output_word_frequency(make_skew_chain(a, mu), u);
}

Rational left_word_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                             const Word& u) {
    if (!is_reversible(a))
        throw PreconditionError("left-half frequencies need a reversible automaton");
    MealyAutomaton rev = reverse(a);
    MarkovMeasure rmu = reversed_measure(mu);
    Word ru(u.rbegin(), u.rend());
    return output_word_frequency(rev, g, rmu, ru);
}

ProbVector frequency_vector(const MealyAutomaton& a, State g, const MarkovMeasure& mu) {
    (void)g;
    SkewChain sc = make_skew_chain(a, mu);
    std::vector<Rational> f;
    f.reserve(a.alphabet().size());
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
        f.push_back(output_word_frequency(sc, Word{x}));
    return ProbVector(std::move(f));
}

}  // namespace mealy
