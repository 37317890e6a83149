#include <doctest.h>

#include "helpers.hpp"
#include "mealymeasure/errors.hpp"

using namespace mealy;

TEST_CASE("splitmix64 reference stream") {
    Prng a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFull);
    CHECK(a.next() == 0x6E789E6AA1B965F4ull);
    CHECK(a.next() == 0x06C45D188009454Full);
    CHECK(a.next() == 0xF88BB8A8724C81ECull);

    Prng b(42);
    CHECK(b.next() == 0xBDD732262FEB6E95ull);
    CHECK(b.next() == 0x28EFE333B266F103ull);
    CHECK(b.next() == 0x47526757130F9F52ull);
}

TEST_CASE("sampling respects degenerate rows") {
    MarkovMeasure left = bernoulli(Alphabet({"0", "1"}), ProbVector({Q("1"), Q("0")}));
    Word w = sample_sequence(left, 50, 7);
    for (Symbol x : w) CHECK(x == 0);

    MarkovMeasure right = bernoulli(Alphabet({"0", "1"}), ProbVector({Q("0"), Q("1")}));
    Word v = sample_sequence(right, 50, 7);
    for (Symbol x : v) CHECK(x == 1);

    // deterministic cycle: after the first draw everything is forced
    MarkovMeasure cyc(Alphabet({"0", "1"}),
                      StochasticMatrix({{Q("0"), Q("1")}, {Q("1"), Q("0")}}),
                      ProbVector({Q("1/2"), Q("1/2")}));
    Word c = sample_sequence(cyc, 20, 3);
    for (size_t i = 1; i < c.size(); ++i) CHECK(c[i] == 1 - c[i - 1]);
}

TEST_CASE("sampling is reproducible and seed-sensitive") {
    MarkovMeasure mu = fixture_chain("markov2_13_15.chain");
    Word w1 = sample_sequence(mu, 2000, 42);
    Word w2 = sample_sequence(mu, 2000, 42);
    CHECK(w1 == w2);
    Word w3 = sample_sequence(mu, 2000, 43);
    CHECK(w1 != w3);
    CHECK(w1.size() == 2000);
}

TEST_CASE("sampled sequences obey forbidden transitions") {
    MarkovMeasure halves = fixture_chain("ternary_halves.chain");
    Word w = sample_sequence(halves, 5000, 11);
    // L(1,3) = L(2,1) = L(3,2) = 0 in fixture symbol indices 0,1,2
    for (size_t i = 1; i < w.size(); ++i) {
        CHECK(halves.matrix().at(w[i - 1], w[i]) > 0);
    }
}

TEST_CASE("streaming through the automaton matches apply_word") {
    MealyAutomaton odo = fixture_automaton("odometer.mealy");
    CHECK(word_to_string(odo.alphabet(),
                         run_automaton_stream(odo, S(odo, "q"), W(odo, "11111"))) == "00000");

    MealyAutomaton al = fixture_automaton("aleshin.mealy");
    MarkovMeasure mu = fixture_chain("markov2_13_15.chain");
    Word in = sample_sequence(mu, 300, 5);
    Word out = run_automaton_stream(al, S(al, "a"), in);
    CHECK(out == apply_output(al, S(al, "a"), in));
}

TEST_CASE("empirical frequency counts occurrences over positions") {
    MealyAutomaton a = fixture_automaton("odometer.mealy");
    CHECK(empirical_frequency(W(a, "0101"), W(a, "01")) == Q("2/3"));
    CHECK(empirical_frequency(W(a, "0000"), W(a, "0")) == 1);
    CHECK(empirical_frequency(W(a, "0011"), W(a, "10")) == 0);
    CHECK(empirical_frequency(W(a, "0110"), W(a, "1")) == Q("1/2"));
    CHECK(empirical_frequency(W(a, "01"), W(a, "01")) == 1);
}

TEST_CASE("monte carlo report converges to the exact frequencies") {
    MealyAutomaton al = fixture_automaton("aleshin.mealy");
    MarkovMeasure mu = fixture_chain("markov2_13_15.chain");
    State g = S(al, "a");

    SimulationReport rep =
        monte_carlo_report(al, g, mu, 100000, 42, {W(al, "0"), W(al, "1"), W(al, "01")});
    CHECK(rep.seed == 42);
    CHECK(rep.steps == 100000);
    REQUIRE(rep.queries.size() == 3);

    CHECK(rep.queries[0].predicted == Q("13/24"));
    CHECK(rep.queries[1].predicted == Q("11/24"));
    for (const auto& q : rep.queries) {
        CHECK(q.deviation == abs(q.empirical - q.predicted));
        CHECK(q.deviation < Q("1/100"));
    }

    // letter empiricals over the same run partition the positions
    CHECK(rep.queries[0].empirical + rep.queries[1].empirical == 1);

    // identical runs, identical numbers
    SimulationReport again =
        monte_carlo_report(al, g, mu, 100000, 42, {W(al, "0"), W(al, "1"), W(al, "01")});
    CHECK(again.queries[0].empirical == rep.queries[0].empirical);
}

TEST_CASE("empirical deviation shrinks as the run grows") {
    MealyAutomaton al = fixture_automaton("aleshin.mealy");
    MarkovMeasure mu = fixture_chain("markov2_13_15.chain");
    State g = S(al, "a");

    auto dev = [&](int n) {
        SimulationReport rep = monte_carlo_report(al, g, mu, n, 42, {W(al, "0")});
        return rep.queries[0].deviation;
    };
    Rational d4 = dev(10000), d5 = dev(100000), d6 = dev(1000000);
    CHECK(d4 < Q("1/20"));
    CHECK(d5 < Q("1/100"));
    CHECK(d6 < Q("1/200"));
    // monotone within a 2x noise allowance and a small additive floor
    CHECK(d5 <= 2 * d4 + Q("1/1000"));
    CHECK(d6 <= 2 * d5 + Q("1/1000"));
}

TEST_CASE("identity automata reproduce the sampled word exactly") {
    MealyAutomaton idm = fixture_automaton("identity2.mealy");
    MarkovMeasure mu = fixture_chain("markov2_13_15.chain");
    SimulationReport rep = monte_carlo_report(idm, 0, mu, 5000, 9, {W(idm, "0"), W(idm, "00")});
    // outputs equal inputs, so empirical output frequencies are input ones
    Word in = sample_sequence(mu, 5000, 9);
    CHECK(rep.queries[0].empirical == empirical_frequency(in, W(idm, "0")));
    CHECK(rep.queries[1].empirical == empirical_frequency(in, W(idm, "00")));
}
