#pragma once

#include "mealymeasure/skew.hpp"

namespace mealy {

// Asymptotic frequency of letter x in the output g(omega) for a mu-generic
// omega: sum of t over edges emitting x. Independent of g; requires L-strong
// connectivity.
Rational output_letter_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                 Symbol x);

// Asymptotic frequency of the word u in the output: path sum over the Moore
// diagram, computed by matrix-vector DP over (current state, last input).
Rational output_word_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                               const Word& u);

// Same limit computed through the reverse automaton, the reversed chain and
// the reversed word. Requires a reversible automaton; serves as an
// independent cross-check path.
Rational left_word_frequency(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                             const Word& u);

// All single-letter frequencies; sums to 1.
ProbVector frequency_vector(const MealyAutomaton& a, State g, const MarkovMeasure& mu);

// Precomputed-skew variants used internally and by the CLI.
Rational output_word_frequency(const SkewChain& sc, const Word& u);

}  // namespace mealy
