#include "mealymeasure/classify.hpp"

#include <algorithm>
#include <functional>

#include "mealymeasure/activity.hpp"
#include "mealymeasure/errors.hpp"
#include "mealymeasure/frequency.hpp"
#include "mealymeasure/skew.hpp"

namespace mealy {

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Equal: return "Equal";
        case VerdictKind::AbsolutelyContinuous: return "AbsolutelyContinuous";
        case VerdictKind::Singular: return "Singular";
        default: return "Unknown";
    }
}

bool equality_check_bernoulli(const MealyAutomaton& a, State g, const ProbVector& l) {
    (void)g;  // the criterion quantifies over every state
    if (!is_invertible(a)) throw PreconditionError("equality_check_bernoulli: not invertible");
    if (!is_strongly_connected(a))
        throw PreconditionError("equality_check_bernoulli: not strongly connected");
    if (!l.positive()) throw PreconditionError("equality_check_bernoulli: l must be positive");
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < a.alphabet().size(); ++x)
            if (l[a.out(s, x)] != l[x]) return false;
    return true;
}

bool equality_check_markov(const MealyAutomaton& a, State g, const MarkovMeasure& mu) {
    if (!is_invertible(a)) throw PreconditionError("equality_check_markov: not invertible");
    if (!is_L_strongly_connected(a, mu.matrix()))
        throw PreconditionError("equality_check_markov: not L-strongly connected");
    const auto& l = mu.initial();
    const auto& L = mu.matrix();
    int m = a.alphabet().size();
    for (Symbol x = 0; x < m; ++x)
        if (l[a.out(g, x)] != l[x]) return false;
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < m; ++x)
            for (Symbol y = 0; y < m; ++y)
                if (L.at(a.out(s, x), a.out(a.next(s, x), y)) != L.at(x, y)) return false;
    return true;
}

namespace {

// Words of one length in lexicographic order.
void lex_words(int m, int len, const std::function<bool(const Word&)>& visit) {
    Word w(len, 0);
    while (true) {
        if (visit(w)) return;
        int i = len - 1;
        while (i >= 0 && w[i] == m - 1) w[i--] = 0;
        if (i < 0) return;
        w[i]++;
    }
}

}  // namespace

std::optional<Word> singularity_witness(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                        int max_len) {
    if (!is_irreducible(mu.matrix()))
        throw PreconditionError("singularity_witness: L must be irreducible");
    SkewChain sc = make_skew_chain(a, mu);
    if (!is_irreducible(sc.T))
        throw PreconditionError("singularity_witness: automaton is not L-strongly connected");
    (void)g;

    int m = a.alphabet().size();
    std::optional<Word> found;
    for (int len = 1; len <= max_len && !found; ++len) {
        lex_words(m, len, [&](const Word& u) {
            if (output_word_frequency(sc, u) != cylinder_measure(mu, u)) {
                found = u;
                return true;
            }
            return false;
        });
    }
    return found;
}

namespace {

std::string word_or_empty(const Alphabet& a, const Word& w) {
    return w.empty() ? std::string("(empty)") : word_to_string(a, w);
}

// Exhaustive g_*mu(w) = mu(w) comparison up to a length bound; reports the
// first mismatch.
std::optional<Word> cylinder_mismatch(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                                      int max_len) {
    int m = a.alphabet().size();
    std::optional<Word> found;
    for (int len = 1; len <= max_len && !found; ++len) {
        lex_words(m, len, [&](const Word& w) {
            if (pushforward_cylinder(a, g, mu, w) != cylinder_measure(mu, w)) {
                found = w;
                return true;
            }
            return false;
        });
    }
    return found;
}

}  // namespace

Verdict verdict(const MealyAutomaton& a, State g, const MarkovMeasure& mu,
                const VerdictOptions& opts) {
    if (!is_irreducible(mu.matrix()))
        throw PreconditionError("verdict: L must be irreducible");

    Verdict v;
    std::vector<std::string> failed;

    bool invertible = is_invertible(a);
    bool strongly_connected = is_strongly_connected(a);
    bool reversible = is_reversible(a);
    bool lsc = is_L_strongly_connected(a, mu.matrix());
    bool bern = is_bernoulli(mu);
    bool poly = classify_activity(a, g) == ActivityClass::Polynomial;

    // Rule 1: polynomial activity, density table exists on the truncation.
    if (poly) {
        if (!is_non_atomic(mu)) {
            failed.push_back("polynomial-density: measure has an atom");
        } else {
            try {
                RadonNikodymTable table = radon_nikodym(a, g, mu, opts.rn_depth);
                bool all_one = std::all_of(table.entries.begin(), table.entries.end(),
                                           [](const RadonNikodymEntry& e) { return e.density == 1; });
                v.rule = "polynomial-density";
                v.evidence.push_back("activity: polynomial");
                v.evidence.push_back("density table depth " + std::to_string(table.depth) +
                                     ", residual mass " + to_string(table.residual_mass) +
                                     (table.complete ? ", coverage exact" : ", truncated"));
                if (all_one && table.complete && table.residual_mass == 0) {
                    v.kind = VerdictKind::Equal;
                    v.evidence.push_back("density is identically 1 with exact coverage");
                } else {
                    v.kind = VerdictKind::AbsolutelyContinuous;
                }
                v.table = std::move(table);
                return v;
            } catch (const PreconditionError& e) {
                failed.push_back(std::string("polynomial-density: ") + e.what());
            }
        }
    } else {
        failed.push_back("polynomial-density: activity is exponential");
    }

    // Rule 2: invertible Bernoulli dichotomy.
    if (invertible && strongly_connected && bern && mu.initial().positive()) {
        v.rule = "invertible-bernoulli";
        bool equal = equality_check_bernoulli(a, g, mu.initial());
        if (equal) {
            v.kind = VerdictKind::Equal;
            v.evidence.push_back("l[lambda(s,x)] = l[x] for every state s and letter x");
        } else {
            v.kind = VerdictKind::Singular;
            for (State s = 0; s < a.state_count() && v.evidence.empty(); ++s)
                for (Symbol x = 0; x < a.alphabet().size(); ++x)
                    if (mu.initial()[a.out(s, x)] != mu.initial()[x]) {
                        v.evidence.push_back(
                            "invertible Bernoulli dichotomy: l[lambda(s,x)] != l[x] at state '" +
                            a.state_name(s) + "', letter '" + a.alphabet().name(x) + "'");
                        break;
                    }
        }
        return v;
    }
    if (!invertible) failed.push_back("invertible-bernoulli: automaton is not invertible");
    else if (!bern) failed.push_back("invertible-bernoulli: measure is not Bernoulli");
    else if (!strongly_connected)
        failed.push_back("invertible-bernoulli: automaton is not strongly connected");
    else failed.push_back("invertible-bernoulli: l has a zero coordinate");

    // Rule 3: invertible reversible Markov dichotomy.
    if (invertible && reversible && lsc) {
        v.rule = "invertible-reversible-markov";
        if (equality_check_markov(a, g, mu)) {
            v.kind = VerdictKind::Equal;
            v.evidence.push_back(
                "l[lambda(g,x)] = l[x] and L[lambda(s,x),lambda(pi(s,x),y)] = L[x,y] throughout");
        } else {
            v.kind = VerdictKind::Singular;
            v.evidence.push_back(
                "reversible Markov dichotomy: the letter/transition matching conditions fail");
        }
        return v;
    }
    if (invertible && !reversible)
        failed.push_back("invertible-reversible-markov: automaton is not reversible");
    else if (invertible && !lsc)
        failed.push_back("invertible-reversible-markov: automaton is not L-strongly connected");

    // Rule 4: invertible with tensor-decomposing skew vector.
    if (invertible && lsc) {
        SkewChain sc = make_skew_chain(a, mu);
        if (tensor_decomposes(sc)) {
            v.rule = "invertible-tensor";
            v.evidence.push_back("t = k (x) l: the image is Markov, so it is singular or equal");
            bool equal = equality_check_markov(a, g, mu);
            auto mismatch = cylinder_mismatch(a, g, mu, opts.cylinder_check_len);
            v.evidence.push_back(
                std::string("equality side decided by the invertible Markov matching criterion "
                            "(hypothesis gap: dichotomy alone gives no effective test); cylinder "
                            "comparison to length ") +
                std::to_string(opts.cylinder_check_len) +
                (mismatch ? " found mismatch at '" + word_or_empty(mu.alphabet(), *mismatch) + "'"
                          : " agrees"));
            if (equal) {
                v.kind = VerdictKind::Equal;
            } else {
                v.kind = VerdictKind::Singular;
                if (mismatch) v.witness = *mismatch;
            }
            return v;
        }
        failed.push_back("invertible-tensor: t does not decompose as k (x) l");
    }

    // Rule 5: frequency-mismatch witness.
    if (lsc) {
        auto witness = singularity_witness(a, g, mu, opts.witness_max_len);
        if (witness) {
            v.rule = "frequency-witness";
            v.kind = VerdictKind::Singular;
            v.witness = witness;
            SkewChain sc = make_skew_chain(a, mu);
            v.evidence.push_back(
                "output frequency of '" + word_to_string(mu.alphabet(), *witness) + "' is " +
                to_string(output_word_frequency(sc, *witness)) + " but mu gives " +
                to_string(cylinder_measure(mu, *witness)) +
                "; generic outputs and generic inputs separate");
            return v;
        }
        failed.push_back("frequency-witness: no output-frequency mismatch up to length " +
                         std::to_string(opts.witness_max_len));
    } else {
        failed.push_back("frequency-witness: automaton is not L-strongly connected");
    }

    v.kind = VerdictKind::Unknown;
    v.rule = "out-of-scope";
    v.evidence = std::move(failed);
    return v;
}

}  // namespace mealy
