#pragma once

#include <set>

#include "mealymeasure/automaton.hpp"
#include "mealymeasure/rational.hpp"

namespace mealy {

enum class ActivityClass { Polynomial, Exponential };

const char* to_string(ActivityClass c);

// Largest set F of states that output identically and transition only into
// F (greatest fixed point). States in F act trivially on all words.
std::set<State> trivial_states(const MealyAutomaton& a);

// R_g(n): number of length-n words w whose restriction pi(g, w) is
// nontrivial. Exact big-integer dynamic programming.
BigInt activity_count(const MealyAutomaton& a, State g, int n);

// Sidki's dichotomy: polynomial iff no nontrivial state reachable from g
// lies on two distinct simple cycles of the Moore diagram.
ActivityClass classify_activity(const MealyAutomaton& a, State g);

}  // namespace mealy
