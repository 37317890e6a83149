#pragma once

#include <string>

#include "mealymeasure/automaton.hpp"
#include "mealymeasure/markov.hpp"
#include "mealymeasure/simulate.hpp"

inline std::string fixture_path(const std::string& name) {
    return std::string(MEALY_FIXTURE_DIR) + "/" + name;
}

inline mealy::MealyAutomaton fixture_automaton(const std::string& name) {
    return mealy::load_automaton(fixture_path(name));
}

inline mealy::MarkovMeasure fixture_chain(const std::string& name) {
    return mealy::load_chain(fixture_path(name));
}

inline mealy::Word W(const mealy::MealyAutomaton& a, const std::string& s) {
    return mealy::parse_word(a.alphabet(), s);
}

inline mealy::Word W(const mealy::MarkovMeasure& mu, const std::string& s) {
    return mealy::parse_word(mu.alphabet(), s);
}

inline mealy::Rational Q(const std::string& s) { return mealy::parse_rational(s); }

inline mealy::State S(const mealy::MealyAutomaton& a, const std::string& name) {
    return *a.find_state(name);
}

// all words of the given length, lexicographic in symbol indices
inline std::vector<mealy::Word> all_words(int alphabet_size, int len) {
    std::vector<mealy::Word> out;
    mealy::Word w(len, 0);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == alphabet_size - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    if (len == 0) out.resize(1);
    return out;
}

// uniform-ish random automaton for property tests; optionally force per-state
// output permutations so the result is invertible
inline mealy::MealyAutomaton random_automaton(mealy::Prng& rng, int n_states, int n_letters,
                                              bool force_invertible) {
    std::vector<std::string> syms, states;
    for (int x = 0; x < n_letters; ++x) syms.push_back(std::string(1, char('0' + x)));
    for (int s = 0; s < n_states; ++s) states.push_back(std::string(1, char('a' + s)));
    std::vector<mealy::State> tr(n_states * n_letters);
    std::vector<mealy::Symbol> out(n_states * n_letters);
    for (int s = 0; s < n_states; ++s) {
        std::vector<mealy::Symbol> perm(n_letters);
        for (int x = 0; x < n_letters; ++x) perm[x] = x;
        for (int x = n_letters - 1; x > 0; --x)
            std::swap(perm[x], perm[rng.next() % (x + 1)]);
        for (int x = 0; x < n_letters; ++x) {
            tr[s * n_letters + x] = mealy::State(rng.next() % n_states);
            out[s * n_letters + x] =
                force_invertible ? perm[x] : mealy::Symbol(rng.next() % n_letters);
        }
    }
    return mealy::MealyAutomaton(mealy::Alphabet(syms), states, tr, out);
}

// random stochastic matrix with small rational entries; density in (0,1] is the
// chance each off-pattern entry is allowed to be zero
inline mealy::StochasticMatrix random_stochastic(mealy::Prng& rng, int n, bool allow_zeros) {
    std::vector<std::vector<mealy::Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
        std::vector<long> weights(n);
        long total = 0;
        while (total == 0) {
            for (int j = 0; j < n; ++j) {
                long w = rng.next() % 4;
                if (!allow_zeros && w == 0) w = 1;
                weights[j] = w;
                total += w;
            }
        }
        for (int j = 0; j < n; ++j) {
            mealy::Rational e(weights[j], total);
            e.canonicalize();
            rows[i].push_back(e);
        }
    }
    return mealy::StochasticMatrix(rows);
}
