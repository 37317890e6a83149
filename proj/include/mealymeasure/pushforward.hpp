#pragma once

#include <optional>

#include "mealymeasure/markov.hpp"

namespace mealy {

// g_*mu(w X^N) = mu(g^{-1}(w X^N)): sum of mu over all input paths emitting
// w. Preimages of cylinders are finite unions of same-length cylinders, so
// this is a finite path sum (matrix-vector DP).
Rational pushforward_cylinder(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                              const Word& w);

// Subset-construction node still undecided at the depth bound.
struct FrontierNode {
    Word word;
    std::vector<State> states;  // {pi(g,u) : lambda(g,u) = word}, sorted
};

// Truncated enumeration of V_max(g): the minimal nonempty output words w
// such that every preimage path of w ends in a trivial state (vacuously
// included when w has no preimage).
struct VMaxEnumeration {
    std::vector<Word> members;  // shortlex order, none a proper prefix of another
    std::vector<FrontierNode> frontier;
    std::optional<Rational> covered_mass;  // sum of mu(w X^N) over members, when mu was given
    int depth = 0;

    bool complete() const { return frontier.empty(); }
};

VMaxEnumeration enumerate_vmax(const MealyAutomaton& a, State g, int depth);
VMaxEnumeration enumerate_vmax(const MealyAutomaton& a, State g, int depth,
                               const MarkovMeasure& mu);

struct RadonNikodymEntry {
    Word cylinder;  // w x with w a covered V_max member, x a letter
    Rational density;
};

// Truncated density table of g_*mu against mu: density is constant on each
// cylinder wx, w in V_max(g). residual_mass is the mu-mass not covered at
// the chosen depth.
struct RadonNikodymTable {
    std::vector<RadonNikodymEntry> entries;  // shortlex by cylinder; mu(cylinder) > 0 only
    Rational residual_mass;
    int depth = 0;
    bool complete = false;
};

// Requires polynomial activity and non-atomic mu. For every covered member
// w and letter x with mu(wx X^N) = 0 the pushforward must vanish as well;
// otherwise a PreconditionError carrying the witness cylinder is thrown and
// g_*mu is not absolutely continuous with respect to mu.
RadonNikodymTable radon_nikodym(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                int depth);

// Either all of l and L are positive, or the implication family
// (L_{lambda(s,x),lambda(pi(s,x),y)} = 0 implies L_{x,y} = 0, plus the
// matching condition on l at g) holds. Sufficient, not necessary.
bool check_abs_continuity_sufficient(const MealyAutomaton& a, State g, const MarkovMeasure& mu);

}  // namespace mealy
