#pragma once

#include <cstdint>

#include "mealymeasure/markov.hpp"

namespace mealy {

// SplitMix64; bit-exact across platforms, used for all sampling.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// Samples n symbols of the chain: first by l, then by rows of L. Each draw
// picks the least index whose cumulative probability strictly exceeds
// u = draw / 2^64, compared exactly as dyadic rationals.
Word sample_sequence(const MarkovMeasure& mu, int n, uint64_t seed);

// Streaming apply_word: output word only, O(1) working memory.
Word run_automaton_stream(const MealyAutomaton& a, State g, const Word& w);

// Occurrences of u at positions 0..|w|-|u| divided by |w|-|u|+1.
Rational empirical_frequency(const Word& w, const Word& u);

struct SimulationQuery {
    Word word;
    Rational empirical;
    Rational predicted;
    Rational deviation;  // |empirical - predicted|
};

struct SimulationReport {
    uint64_t seed = 0;
    int steps = 0;
    std::vector<SimulationQuery> queries;
};

// Samples one mu-generic input of length n, pushes it through g and compares
// empirical output frequencies with the closed-form predictions. Requires
// L-strong connectivity (for the predictions).
SimulationReport monte_carlo_report(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                    int n, uint64_t seed, const std::vector<Word>& queries);

}  // namespace mealy
