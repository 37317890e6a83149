#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mealymeasure/errors.hpp"

namespace mealy {

using Symbol = int;  // index into an Alphabet
using State = int;   // index into an automaton's state list
using Word = std::vector<Symbol>;

// Ordered list of distinct symbol tokens. Order is fixed at construction and
// drives all matrix/vector indexing downstream.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Symbol x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Symbol> find(const std::string& token) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

std::string word_to_string(const Alphabet& a, const Word& w);

// Parses a word written either as one character per symbol (only when every
// symbol token is a single character) or as comma-separated tokens.
Word parse_word(const Alphabet& a, const std::string& text);

// Finite Mealy automaton (X, S, pi, lambda). Transition pi and output lambda
// are total maps on S x X, stored row-major with index s*|X|+x. There is no
// initial state: every analysis takes the acting state as a parameter.
class MealyAutomaton {
public:
    MealyAutomaton(Alphabet alphabet, std::vector<std::string> state_names,
                   std::vector<State> transition, std::vector<Symbol> output);

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return static_cast<int>(state_names_.size()); }
    const std::string& state_name(State s) const { return state_names_[s]; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    std::optional<State> find_state(const std::string& name) const;

    State next(State s, Symbol x) const { return transition_[s * alphabet_.size() + x]; }
    Symbol out(State s, Symbol x) const { return output_[s * alphabet_.size() + x]; }

    int pair_count() const { return state_count() * alphabet_.size(); }
    int pair_index(State s, Symbol x) const { return s * alphabet_.size() + x; }
    std::pair<State, Symbol> pair_of(int idx) const {
        return {idx / alphabet_.size(), idx % alphabet_.size()};
    }
    std::string pair_label(int idx) const;

    bool operator==(const MealyAutomaton& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, State> state_index_;
    std::vector<State> transition_;
    std::vector<Symbol> output_;
};

// One step of a run: the state before consuming `in`.
struct TraceStep {
    State state;
    Symbol in;
    Symbol out;
};

struct Trace {
    std::vector<TraceStep> steps;
    State end_state;

    Word output() const;
};

// Runs w through the automaton starting at state s.
Trace apply_word(const MealyAutomaton& a, State s, const Word& w);

// Convenience: the output word lambda(s, w).
Word apply_output(const MealyAutomaton& a, State s, const Word& w);

// The section/restriction state pi(s, u).
State restriction_state(const MealyAutomaton& a, State s, const Word& u);

bool is_invertible(const MealyAutomaton& a);

// Swaps the input/output fields of every edge. Requires is_invertible.
MealyAutomaton invert(const MealyAutomaton& a);

bool is_reversible(const MealyAutomaton& a);

// Reverses every edge s -x|y-> s' to s' -x|y'-> s. Requires is_reversible.
MealyAutomaton reverse(const MealyAutomaton& a);

bool is_strongly_connected(const MealyAutomaton& a);

// Product automaton in which b post-processes a's output. State (p, q) acts
// as the composition q after p; state names are "<p>.<q>".
MealyAutomaton compose(const MealyAutomaton& a, const MealyAutomaton& b);

// Text format, line oriented, '#' starts a comment:
//   alphabet <sym>...
//   states <name>...
//   edge <state> <in> <next-state> <out>     (exactly |S|*|X| edge lines)
MealyAutomaton parse_automaton(const std::string& text);

std::string serialize_automaton(const MealyAutomaton& a);

MealyAutomaton load_automaton(const std::string& path);

}  // namespace mealy
