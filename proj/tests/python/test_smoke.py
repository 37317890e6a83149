import os
from fractions import Fraction

import pytest

import mealymeasure as mm

FIXTURES = os.environ.get("MEALY_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fx(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="module")
def aleshin():
    return mm.MealyAutomaton.load(fx("aleshin.mealy"))


@pytest.fixture(scope="module")
def markov2():
    return mm.MarkovMeasure.load(fx("markov2_13_15.chain"))


def test_automaton_roundtrip(aleshin):
    assert aleshin.states == ["a", "b", "c"]
    assert aleshin.alphabet == ["0", "1"]
    again = mm.MealyAutomaton.parse(aleshin.serialize())
    assert again == aleshin
    out, end = aleshin.apply("a", "01")
    assert (out, end) == ("11", "a")
    assert aleshin.restriction("a", "10") == "b"


def test_automaton_predicates(aleshin):
    assert mm.is_invertible(aleshin)
    assert mm.is_reversible(aleshin)
    assert mm.is_strongly_connected(aleshin)
    inv = mm.invert(aleshin)
    word = "0110100"
    assert inv.apply("a", aleshin.apply("a", word)[0])[0] == word


def test_chain_values(markov2):
    assert markov2.initial == [Fraction(3, 8), Fraction(5, 8)]
    assert markov2.cylinder("00") == Fraction(1, 4)
    assert markov2.irreducible
    assert markov2.non_atomic


def test_parse_error_reports_line():
    with pytest.raises(ValueError, match="line 2"):
        mm.MarkovMeasure.parse("alphabet 0 1\nrow 0 1/2 1/3\nrow 1 1/2 1/2\n")


def test_frequencies(aleshin, markov2):
    assert mm.output_word_frequency(aleshin, "a", markov2, "0") == Fraction(13, 24)
    assert mm.frequency_vector(aleshin, "a", markov2) == [Fraction(13, 24), Fraction(11, 24)]
    assert mm.left_word_frequency(aleshin, "a", markov2, "0") == Fraction(13, 24)

    lamp = mm.MealyAutomaton.load(fx("lamplighter.mealy"))
    assert mm.output_word_frequency(lamp, "a", markov2, "00") == Fraction(3, 16)


def test_skew_chain(markov2):
    t3 = mm.MealyAutomaton.load(fx("ternary3.mealy"))
    halves = mm.MarkovMeasure.load(fx("ternary_halves.chain"))
    sk = mm.skew_chain(t3, halves)
    assert sk["t"] == [Fraction(x) for x in
                       ("2/15", "2/15", "1/5", "1/15", "2/15", "1/15", "2/15", "1/15", "1/15")]
    assert sk["k"] == [Fraction(3, 7), Fraction(2, 7), Fraction(2, 7)]
    assert sk["tensor_decomposes"] is False
    assert sk["pairs"][0] == "(a,1)"
    assert mm.is_L_strongly_connected(t3, halves)


def test_activity():
    odo = mm.MealyAutomaton.load(fx("odometer.mealy"))
    assert mm.trivial_states(odo) == ["e"]
    assert mm.classify_activity(odo, "q") == "polynomial"
    assert mm.activity_count(odo, "q", 30) == "1"

    al = mm.MealyAutomaton.load(fx("aleshin.mealy"))
    assert mm.classify_activity(al, "a") == "exponential"
    assert mm.activity_count(al, "a", 20) == str(2**20)


def test_pushforward_and_rn(markov2):
    odo = mm.MealyAutomaton.load(fx("odometer.mealy"))
    assert mm.pushforward_cylinder(odo, "q", markov2, "01") == Fraction(1, 8)

    v = mm.enumerate_vmax(odo, "q", 5)
    assert v["members"] == ["1", "01", "001", "0001", "00001"]
    assert not v["complete"]

    table = mm.radon_nikodym(odo, "q", markov2, 12)
    assert table["residual_mass"] == Fraction(256, 59049)
    assert table["entries"]["10"] == 2

    with pytest.raises(ArithmeticError):
        mm.radon_nikodym(mm.MealyAutomaton.load(fx("aleshin.mealy")), "a", markov2, 6)


def test_verdicts(aleshin, markov2):
    v = mm.verdict(aleshin, "a", markov2)
    assert v["kind"] == "Singular"
    assert v["rule"] == "invertible-reversible-markov"

    uni = mm.MarkovMeasure.bernoulli(["0", "1"], ["1/2", "1/2"])
    assert mm.verdict(aleshin, "a", uni)["kind"] == "Equal"

    ts = mm.MealyAutomaton.load(fx("twostate_ternary.mealy"))
    b = mm.MarkovMeasure.load(fx("bernoulli_12_14_14.chain"))
    v2 = mm.verdict(ts, "s0", b)
    assert v2["kind"] == "Singular"
    assert v2["witness"] == "22"
    assert mm.singularity_witness(ts, "s0", b, 1) is None

    d2 = mm.MealyAutomaton.load(fx("delay2.mealy"))
    b13 = mm.MarkovMeasure.load(fx("bernoulli_13_23.chain"))
    assert mm.verdict(d2, "d0", b13)["kind"] == "Unknown"


def _splitmix64_reference(seed, count):
    mask = (1 << 64) - 1
    x = seed
    out = []
    for _ in range(count):
        x = (x + 0x9E3779B97F4A7C15) & mask
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


def test_prng_matches_independent_reference():
    for seed in (0, 42, 2**63 + 11):
        assert mm.splitmix64(seed, 8) == _splitmix64_reference(seed, 8)


def test_simulation_determinism(aleshin, markov2):
    rep1 = mm.monte_carlo_report(aleshin, "a", markov2, 20000, 42, ["0", "1"])
    rep2 = mm.monte_carlo_report(aleshin, "a", markov2, 20000, 42, ["0", "1"])
    assert rep1 == rep2
    assert rep1["queries"]["0"]["predicted"] == Fraction(13, 24)
    assert rep1["queries"]["0"]["deviation"] < Fraction(1, 50)

    w = mm.sample_sequence(markov2, 50, 3)
    assert len(w) == 50 and set(w) <= {"0", "1"}
    assert mm.empirical_frequency(aleshin, "0101", "01") == Fraction(2, 3)
