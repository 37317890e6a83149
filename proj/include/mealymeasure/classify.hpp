#pragma once

#include <optional>
#include <string>

#include "mealymeasure/pushforward.hpp"

namespace mealy {

enum class VerdictKind { Equal, AbsolutelyContinuous, Singular, Unknown };

const char* to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::string rule;                   // decision rule that fired
    std::vector<std::string> evidence;  // satisfied/failed conditions, cross-checks
    std::optional<Word> witness;        // frequency-mismatch word, when singular via search
    std::optional<RadonNikodymTable> table;
};

// g_*mu = mu criterion for Bernoulli mu: l_{lambda(s,x)} = l_x for all s, x.
// Requires invertible + strongly connected + positive l.
bool equality_check_bernoulli(const MealyAutomaton& a, State g, const ProbVector& l);

// g_*mu = mu criterion for Markov mu: l_{lambda(g,x)} = l_x for all x and
// L_{lambda(s,x),lambda(pi(s,x),y)} = L_{x,y} for all s, x, y. Requires
// invertible + L-strongly connected.
bool equality_check_markov(const MealyAutomaton& a, State g, const MarkovMeasure& mu);

// Shortest word (lexicographically least among equals) whose asymptotic
// output frequency differs from mu's cylinder mass; such a word witnesses
// singularity. Requires L-strong connectivity and irreducible L.
std::optional<Word> singularity_witness(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                        int max_len);

struct VerdictOptions {
    int witness_max_len = 4;
    int rn_depth = 8;
    int cylinder_check_len = 6;  // safety-net comparison bound for the tensor rule
};

// Decision procedure; the first applicable rule wins. Unknown is a
// first-class outcome carrying the list of failed hypotheses.
Verdict verdict(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                const VerdictOptions& opts = {});

}  // namespace mealy
