#include "mealymeasure/simulate.hpp"

#include "mealymeasure/errors.hpp"
#include "mealymeasure/frequency.hpp"

namespace mealy {

namespace {

// Per-row cumulative numerators scaled to a common denominator, so a draw
// comparison is one integer multiply: cum/den > draw/2^64 iff
// cum * 2^64 > draw * den.
struct CumulativeRow {
    std::vector<BigInt> cum_shifted;  // cumulative numerator << 64
    BigInt den;
};

CumulativeRow make_row(const std::vector<Rational>& probs) {
    CumulativeRow row;
    row.den = 1;
    for (const auto& p : probs) row.den = lcm(row.den, BigInt(p.get_den()));
    BigInt acc = 0;
    for (const auto& p : probs) {
        acc += BigInt(p.get_num()) * (row.den / BigInt(p.get_den()));
        row.cum_shifted.push_back(acc << 64);
    }
    return row;
}

int pick(const CumulativeRow& row, uint64_t draw) {
    BigInt d;
    mpz_import(d.get_mpz_t(), 1, 1, sizeof(draw), 0, 0, &draw);
    BigInt scaled = d * row.den;
    for (size_t i = 0; i < row.cum_shifted.size(); ++i)
        if (row.cum_shifted[i] > scaled) return static_cast<int>(i);
    // Unreachable for a probability row: the final cumulative value is 1 and
    // draw/2^64 < 1 always.
    return static_cast<int>(row.cum_shifted.size()) - 1;
}

}  // namespace

Word sample_sequence(const MarkovMeasure& mu, int n, uint64_t seed) {
    if (n < 1) throw PreconditionError("sample_sequence: n must be at least 1");
    int m = mu.alphabet().size();

    CumulativeRow init = make_row(mu.initial().entries());
    std::vector<CumulativeRow> rows;
    rows.reserve(m);
    for (int x = 0; x < m; ++x) {
        std::vector<Rational> row;
        row.reserve(m);
        for (int y = 0; y < m; ++y) row.push_back(mu.matrix().at(x, y));
        rows.push_back(make_row(row));
    }

    Prng rng(seed);
    Word w;
    w.reserve(n);
    w.push_back(pick(init, rng.next()));
    for (int i = 1; i < n; ++i) w.push_back(pick(rows[w.back()], rng.next()));
    return w;
}

Word run_automaton_stream(const MealyAutomaton& a, State g, const Word& w) {
    Word out;
    out.reserve(w.size());
    State cur = g;
    for (Symbol x : w) {
        out.push_back(a.out(cur, x));
        cur = a.next(cur, x);
    }
    return out;
}

Rational empirical_frequency(const Word& w, const Word& u) {
    if (u.empty() || w.size() < u.size())
        throw PreconditionError("empirical_frequency: need |w| >= |u| >= 1");
    size_t positions = w.size() - u.size() + 1;
    long count = 0;
    for (size_t i = 0; i < positions; ++i) {
        bool hit = true;
        for (size_t j = 0; j < u.size(); ++j)
            if (w[i + j] != u[j]) {
                hit = false;
                break;
            }
        if (hit) ++count;
    }
    Rational r(count, positions);
    r.canonicalize();
    return r;
}

SimulationReport monte_carlo_report(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                    int n, uint64_t seed, const std::vector<Word>& queries) {
    SkewChain sc = make_skew_chain(a, mu);
    SimulationReport report;
    report.seed = seed;
    report.steps = n;

    Word input = sample_sequence(mu, n, seed);
    Word output = run_automaton_stream(a, g, input);

    for (const auto& u : queries) {
        SimulationQuery q;
        q.word = u;
        q.empirical = empirical_frequency(output, u);
        q.predicted = output_word_frequency(sc, u);
        q.deviation = abs(q.empirical - q.predicted);
        report.queries.push_back(std::move(q));
    }
    return report;
}

}  // namespace mealy
