#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mealymeasure/errors.hpp"

using namespace mealy;

TEST_CASE("odometer fixture parses to the expected machine") {
    MealyAutomaton a = fixture_automaton("odometer.mealy");
    CHECK(a.state_count() == 2);
    CHECK(a.alphabet().size() == 2);
    CHECK(a.state_names() == std::vector<std::string>{"q", "e"});
    State q = S(a, "q"), e = S(a, "e");
    CHECK(a.next(q, 0) == e);
    CHECK(a.out(q, 0) == 1);
    CHECK(a.next(q, 1) == q);
    CHECK(a.out(q, 1) == 0);
    CHECK(a.next(e, 0) == e);
    CHECK(a.out(e, 0) == 0);
}

TEST_CASE("apply_word runs the odometer as binary increment") {
    MealyAutomaton a = fixture_automaton("odometer.mealy");
    State q = S(a, "q");

    // 110 reads as 3 in least-significant-first binary; +1 gives 4 = 001
    Trace t = apply_word(a, q, W(a, "110"));
    CHECK(word_to_string(a.alphabet(), t.output()) == "001");
    CHECK(a.state_name(t.end_state) == "e");

    // carries propagate through a run of ones
    t = apply_word(a, q, W(a, "1111"));
    CHECK(word_to_string(a.alphabet(), t.output()) == "0000");
    CHECK(a.state_name(t.end_state) == "q");

    // empty word: no output, no movement
    t = apply_word(a, q, {});
    CHECK(t.output().empty());
    CHECK(t.end_state == q);

    // per-step trace entries are the (state, in, out) visits
    t = apply_word(a, q, W(a, "10"));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].state == q);
    CHECK(t.steps[0].in == 1);
    CHECK(t.steps[0].out == 0);
    CHECK(a.state_name(t.steps[1].state) == "q");
    CHECK(t.steps[1].in == 0);
    CHECK(t.steps[1].out == 1);
}

TEST_CASE("apply_output and restriction_state") {
    MealyAutomaton a = fixture_automaton("aleshin.mealy");
    State s = S(a, "a");
    CHECK(word_to_string(a.alphabet(), apply_output(a, s, W(a, "01"))) == "11");
    CHECK(a.state_name(restriction_state(a, s, W(a, "01"))) == "a");
    CHECK(restriction_state(a, s, {}) == s);

    // cocycle: pi(s, uv) = pi(pi(s,u), v)
    for (const Word& u : all_words(2, 3))
        for (const Word& v : all_words(2, 2)) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            CHECK(restriction_state(a, s, uv) ==
                  restriction_state(a, restriction_state(a, s, u), v));
        }
}

TEST_CASE("outputs preserve length and prefixes") {
    Prng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        MealyAutomaton a = random_automaton(rng, 2 + int(rng.next() % 3),
                                            2 + int(rng.next() % 2), false);
        State g = State(rng.next() % a.state_count());
        Word u;
        for (int i = 0; i < 6; ++i) u.push_back(Symbol(rng.next() % a.alphabet().size()));
        Word full = apply_output(a, g, u);
        CHECK(full.size() == u.size());
        for (size_t k = 0; k < u.size(); ++k) {
            Word prefix(u.begin(), u.begin() + k);
            Word out = apply_output(a, g, prefix);
            CHECK(std::equal(out.begin(), out.end(), full.begin()));
        }
    }
}

TEST_CASE("invertibility detection and inversion") {
    MealyAutomaton odo = fixture_automaton("odometer.mealy");
    CHECK(is_invertible(odo));

    // the inverse decrements: swapped in/out labels on each edge
    MealyAutomaton dec = invert(odo);
    State q = S(dec, "q");
    CHECK(dec.out(q, 1) == 0);
    CHECK(dec.state_name(dec.next(q, 1)) == "e");
    CHECK(dec.out(q, 0) == 1);
    CHECK(dec.state_name(dec.next(q, 0)) == "q");
    CHECK(word_to_string(dec.alphabet(), apply_output(dec, q, W(dec, "001"))) == "110");

    CHECK(is_invertible(fixture_automaton("aleshin.mealy")));
    CHECK(is_invertible(fixture_automaton("bellaterra.mealy")));
    CHECK(is_invertible(fixture_automaton("lamplighter.mealy")));
    CHECK_FALSE(is_invertible(fixture_automaton("twostate_ternary.mealy")));
    CHECK_FALSE(is_invertible(fixture_automaton("delay2.mealy")));

    MealyAutomaton bad = fixture_automaton("twostate_ternary.mealy");
    CHECK_THROWS_WITH_AS(invert(bad), doctest::Contains("s0"), PreconditionError);
}

TEST_CASE("inverse undoes the automaton on every short word") {
    for (const char* name : {"odometer.mealy", "aleshin.mealy", "bellaterra.mealy",
                             "swap23.mealy", "lamplighter.mealy"}) {
        CAPTURE(name);
        MealyAutomaton a = fixture_automaton(name);
        MealyAutomaton b = invert(a);
        int m = a.alphabet().size();
        for (State g = 0; g < a.state_count(); ++g)
            for (int len = 0; len <= (m == 2 ? 8 : 5); ++len)
                for (const Word& u : all_words(m, len)) {
                    Word v = apply_output(a, g, u);
                    CHECK(apply_output(b, g, v) == u);
                }
    }
}

TEST_CASE("identity-behaving inverse on random invertible automata") {
    Prng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        MealyAutomaton a = random_automaton(rng, 2 + int(rng.next() % 3), 2, true);
        REQUIRE(is_invertible(a));
        MealyAutomaton b = invert(a);
        CHECK(invert(b) == a);
        for (const Word& u : all_words(2, 5))
            CHECK(apply_output(b, 0, apply_output(a, 0, u)) == u);
    }
}

TEST_CASE("reversibility detection and edge-reversal") {
    CHECK(is_reversible(fixture_automaton("aleshin.mealy")));
    CHECK(is_reversible(fixture_automaton("bellaterra.mealy")));
    CHECK(is_reversible(fixture_automaton("lamplighter.mealy")));
    CHECK(is_reversible(fixture_automaton("swap23.mealy")));
    CHECK(is_reversible(fixture_automaton("twostate_ternary.mealy")));
    CHECK_FALSE(is_reversible(fixture_automaton("odometer.mealy")));
    CHECK_FALSE(is_reversible(fixture_automaton("aleshin_twist.mealy")));
    CHECK_FALSE(is_reversible(fixture_automaton("ternary3.mealy")));

    MealyAutomaton odo = fixture_automaton("odometer.mealy");
    CHECK_THROWS_AS((void)reverse(odo), PreconditionError);

    // reverse flips each edge and keeps its labels
    MealyAutomaton a = fixture_automaton("aleshin.mealy");
    MealyAutomaton r = reverse(a);
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            State s2 = a.next(s, x);
            CHECK(r.next(s2, x) == s);
            CHECK(r.out(s2, x) == a.out(s, x));
        }
    CHECK(reverse(r) == a);
    CHECK(reverse(reverse(fixture_automaton("lamplighter.mealy"))) ==
          fixture_automaton("lamplighter.mealy"));
}

TEST_CASE("strong connectivity of the state graph") {
    CHECK(is_strongly_connected(fixture_automaton("aleshin.mealy")));
    CHECK(is_strongly_connected(fixture_automaton("ternary3.mealy")));
    CHECK(is_strongly_connected(fixture_automaton("swap01.mealy")));
    CHECK_FALSE(is_strongly_connected(fixture_automaton("odometer.mealy")));
}

TEST_CASE("composition behaves as b after a") {
    MealyAutomaton aleshin = fixture_automaton("aleshin.mealy");
    MealyAutomaton flip = fixture_automaton("swap01.mealy");
    MealyAutomaton bell = fixture_automaton("bellaterra.mealy");

    MealyAutomaton comp = compose(aleshin, flip);
    CHECK(comp.state_count() == 3);
    // post-composing with the bit flip reproduces the bellaterra outputs
    for (const std::string sname : {"a", "b", "c"})
        for (int len = 0; len <= 6; ++len)
            for (const Word& u : all_words(2, len)) {
                Word lhs = apply_output(comp, S(comp, sname + ".s"), u);
                Word rhs = apply_output(bell, S(bell, sname), u);
                CHECK(lhs == rhs);
            }

    // flip o flip acts as the identity
    MealyAutomaton twice = compose(flip, flip);
    for (const Word& u : all_words(2, 5)) CHECK(apply_output(twice, 0, u) == u);

    // composing with a one-state identity changes nothing behaviorally
    MealyAutomaton idm = fixture_automaton("identity2.mealy");
    MealyAutomaton same = compose(aleshin, idm);
    for (State s = 0; s < 3; ++s)
        for (const Word& u : all_words(2, 5))
            CHECK(apply_output(same, s, u) == apply_output(aleshin, s, u));

    MealyAutomaton tern = fixture_automaton("ternary3.mealy");
    CHECK_THROWS_AS((void)compose(aleshin, tern), PreconditionError);
}

TEST_CASE("composition state naming") {
    MealyAutomaton a = fixture_automaton("odometer.mealy");
    MealyAutomaton b = fixture_automaton("swap01.mealy");
    MealyAutomaton c = compose(a, b);
    std::set<std::string> names(c.state_names().begin(), c.state_names().end());
    CHECK(names == std::set<std::string>{"q.s", "e.s"});
}

TEST_CASE("parser rejects malformed automata with line positions") {
    auto expect_parse_error = [](const std::string& text, int line, const char* needle) {
        CAPTURE(text);
        try {
            (void)parse_automaton(text);
            FAIL_CHECK("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_parse_error("states q\n", 1, "alphabet");
    expect_parse_error("alphabet 0\nstates q\nedge q 0 q 0\n", 1, "at least two");
    expect_parse_error("alphabet 0 0\nstates q\n", 1, "duplicate");
    expect_parse_error("alphabet 0 1\nstates q q\n", 2, "duplicate");
    expect_parse_error("alphabet 0 1\nstates q\nedge q 0 q 0\nedge q 2 q 0\n", 4, "unknown symbol");
    expect_parse_error("alphabet 0 1\nstates q\nedge q 0 r 0\n", 3, "unknown state");
    expect_parse_error("alphabet 0 1\nstates q\nedge q 0 q 0\nedge q 0 q 1\nedge q 1 q 1\n", 4,
                       "duplicate edge");
    expect_parse_error("alphabet 0 1\nstates q\nedge q 0 q 0\n", 3, "missing edge");
    expect_parse_error("alphabet 0 1\nstates q\nedge q 0 q\nedge q 1 q 1\n", 3, "malformed");
    expect_parse_error("alphabet 0 1\nstates q\nfoo q\n", 3, "unknown token");
}

TEST_CASE("serialization round-trips and ignores comments") {
    for (const char* name : {"odometer.mealy", "aleshin.mealy", "bellaterra.mealy",
                             "ternary3.mealy", "lamplighter.mealy", "twostate_ternary.mealy"}) {
        CAPTURE(name);
        MealyAutomaton a = fixture_automaton(name);
        CHECK(parse_automaton(serialize_automaton(a)) == a);
    }

    MealyAutomaton a = parse_automaton(
        "# comment\nalphabet 0 1\n\nstates q e  # trailing\nedge q 0 e 1\nedge q 1 q 0\n"
        "edge e 0 e 0\nedge e 1 e 1\n");
    CHECK(a == fixture_automaton("odometer.mealy"));

    Prng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        MealyAutomaton r = random_automaton(rng, 3, 2, false);
        CHECK(parse_automaton(serialize_automaton(r)) == r);
    }
}

TEST_CASE("word parsing matches symbol naming conventions") {
    MealyAutomaton a = fixture_automaton("ternary3.mealy");
    CHECK(W(a, "123") == Word{0, 1, 2});
    CHECK(word_to_string(a.alphabet(), Word{2, 0}) == "31");
    CHECK(W(a, "") == Word{});
    CHECK_THROWS_AS(W(a, "14"), std::invalid_argument);

    // multi-character symbol names force the comma-separated form
    MealyAutomaton m = parse_automaton(
        "alphabet aa bb\nstates s\nedge s aa s bb\nedge s bb s aa\n");
    CHECK(parse_word(m.alphabet(), "aa,bb") == Word{0, 1});
    CHECK(word_to_string(m.alphabet(), Word{1, 0}) == "bb,aa");
}
