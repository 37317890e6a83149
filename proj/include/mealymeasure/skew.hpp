#pragma once

#include <optional>

#include "mealymeasure/markov.hpp"

namespace mealy {

// Skew-product chain on S x X (matrix T) together with the state marginal
// chain (matrix K). Pair indexing is lexicographic: (s, x) -> s*|X| + x.
// t and k are absent when the respective chain has no unique stationary
// vector; the recurrent class decomposition is recorded instead.
struct SkewChain {
    MealyAutomaton automaton;
    MarkovMeasure chain;
    StochasticMatrix T;
    StochasticMatrix K;
    std::optional<ProbVector> t;
    std::optional<ProbVector> k;
    std::vector<std::vector<int>> t_classes;  // filled when t is absent
    std::vector<std::vector<int>> k_classes;  // filled when k is absent
};

// T_{(s,x),(s',x')} = L_{x,x'} if pi(s,x) = s', else 0.
StochasticMatrix build_T(const StochasticMatrix& L, const MealyAutomaton& a);

// K_{s,s'} = sum of l_x over x with pi(s,x) = s'.
StochasticMatrix build_K(const ProbVector& l, const MealyAutomaton& a);

SkewChain make_skew_chain(const MealyAutomaton& a, const MarkovMeasure& mu);

// Any (state, symbol context) reaches any other through a positive-measure
// path; equivalent to irreducibility of T.
bool is_L_strongly_connected(const MealyAutomaton& a, const StochasticMatrix& L);

// t_{(s,x)} = k_s * l_x exactly, for all pairs.
bool tensor_decomposes(const ProbVector& t, const ProbVector& k, const ProbVector& l);

bool tensor_decomposes(const SkewChain& sc);

// Measure of a cylinder in the pair chain: t_first * product of T steps.
Rational skew_cylinder_measure(const StochasticMatrix& T, const ProbVector& t,
                               const std::vector<int>& pair_path);

}  // namespace mealy
