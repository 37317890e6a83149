#pragma once

#include <string>
#include <vector>

#include "mealymeasure/automaton.hpp"
#include "mealymeasure/rational.hpp"

namespace mealy {

// Probability vector: entries >= 0 summing to exactly 1.
class ProbVector {
public:
    ProbVector() = default;
    explicit ProbVector(std::vector<Rational> entries);

    int size() const { return static_cast<int>(v_.size()); }
    const Rational& operator[](int i) const { return v_[i]; }
    const std::vector<Rational>& entries() const { return v_; }
    bool positive() const;

    bool operator==(const ProbVector& other) const { return v_ == other.v_; }
    bool operator!=(const ProbVector& other) const { return !(*this == other); }

private:
    std::vector<Rational> v_;
};

// Square matrix with nonnegative rational entries and unit row sums.
class StochasticMatrix {
public:
    StochasticMatrix() = default;
    StochasticMatrix(int n, std::vector<Rational> entries);  // row-major
    explicit StochasticMatrix(const std::vector<std::vector<Rational>>& rows);

    int size() const { return n_; }
    const Rational& at(int i, int j) const { return e_[i * n_ + j]; }
    const std::vector<Rational>& entries() const { return e_; }

    // Adjacency lists of the positive-entry digraph.
    std::vector<std::vector<int>> positive_digraph() const;

    bool operator==(const StochasticMatrix& other) const {
        return n_ == other.n_ && e_ == other.e_;
    }
    bool operator!=(const StochasticMatrix& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Shift-invariant Markov measure on X^N: matrix L plus stationary initial
// vector l. Stationarity is verified exactly unless the unchecked escape
// hatch is used (intermediate constructions only).
class MarkovMeasure {
public:
    MarkovMeasure(Alphabet alphabet, StochasticMatrix L, ProbVector initial);
    static MarkovMeasure unchecked(Alphabet alphabet, StochasticMatrix L, ProbVector initial);

    const Alphabet& alphabet() const { return alphabet_; }
    const StochasticMatrix& matrix() const { return L_; }
    const ProbVector& initial() const { return l_; }

private:
    MarkovMeasure() = default;
    Alphabet alphabet_;
    StochasticMatrix L_;
    ProbVector l_;
};

// v * M as plain vectors.
std::vector<Rational> left_multiply(const std::vector<Rational>& v, const StochasticMatrix& m);

bool is_stationary(const ProbVector& v, const StochasticMatrix& m);

// SCCs of the positive digraph with no outgoing edge, each as a sorted list
// of indices; these are the recurrent classes.
std::vector<std::vector<int>> recurrent_classes(const StochasticMatrix& m);

// Exact solve of v*M = v, sum(v) = 1 by rational Gaussian elimination.
// Requires exactly one recurrent class; throws PreconditionError listing the
// classes otherwise.
ProbVector stationary_vector(const StochasticMatrix& m);

bool is_irreducible(const StochasticMatrix& m);

// mu(w X^N) = l_{w1} L_{w1 w2} ... L_{w_{n-1} w_n}; empty word -> 1.
Rational cylinder_measure(const MarkovMeasure& mu, const Word& w);

// True iff some consecutive transition inside w has a zero L-entry.
bool is_forbidden(const StochasticMatrix& L, const Word& w);

// False iff some single sequence carries positive mass, which happens exactly
// when a positive-measure path enters a cycle of probability-1 transitions.
bool is_non_atomic(const MarkovMeasure& mu);

// Reversed chain: rL_{x x'} = l_{x'} L_{x' x} / l_x. Requires positive l.
StochasticMatrix reversed_chain(const StochasticMatrix& L, const ProbVector& l);

MarkovMeasure reversed_measure(const MarkovMeasure& mu);

// Bernoulli measure: every row of L equals l.
MarkovMeasure bernoulli(const Alphabet& alphabet, const ProbVector& l);

bool is_bernoulli(const MarkovMeasure& mu);

// Text format, line oriented, '#' starts a comment:
//   alphabet <sym>...
//   row <sym> <rational>...        (one per symbol, any order)
//   init <rational>...             (optional; must be stationary)
// Entries are rationals "a/b" or integers; decimals are rejected. When init
// is absent the stationary vector is computed (unique recurrent class
// required).
MarkovMeasure parse_chain(const std::string& text);

std::string serialize_chain(const MarkovMeasure& mu);

MarkovMeasure load_chain(const std::string& path);

}  // namespace mealy
