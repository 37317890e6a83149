#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mealymeasure/activity.hpp"
#include "mealymeasure/classify.hpp"
#include "mealymeasure/errors.hpp"
#include "mealymeasure/frequency.hpp"
#include "mealymeasure/pushforward.hpp"
#include "mealymeasure/simulate.hpp"
#include "mealymeasure/skew.hpp"

namespace py = pybind11;
using namespace mealy;

namespace {

py::object fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(to_string(r));
}

py::list fractions(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& r : v) out.append(fraction(r));
    return out;
}

py::list matrix_rows(const StochasticMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.size(); ++i) {
        py::list row;
        for (int j = 0; j < m.size(); ++j) row.append(fraction(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

Rational rational_from(py::handle h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
    if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
    // fractions.Fraction and anything str()-able as "a/b"
    return parse_rational(py::str(h).cast<std::string>());
}

State state_of(const MealyAutomaton& a, const std::string& name) {
    auto s = a.find_state(name);
    if (!s) throw std::invalid_argument("unknown state '" + name + "'");
    return *s;
}

Word word_of(const MealyAutomaton& a, const std::string& w) { return parse_word(a.alphabet(), w); }

py::dict vmax_dict(const MealyAutomaton& a, const VMaxEnumeration& v) {
    py::dict d;
    py::list members, frontier;
    for (const auto& w : v.members) members.append(word_to_string(a.alphabet(), w));
    for (const auto& node : v.frontier) {
        py::list states;
        for (State s : node.states) states.append(a.state_name(s));
        frontier.append(py::make_tuple(word_to_string(a.alphabet(), node.word), states));
    }
    d["members"] = members;
    d["frontier"] = frontier;
    d["complete"] = v.complete();
    d["depth"] = v.depth;
    d["covered_mass"] = v.covered_mass ? fraction(*v.covered_mass) : py::object(py::none());
    return d;
}

py::dict table_dict(const MealyAutomaton& a, const RadonNikodymTable& t) {
    py::dict d, entries;
    for (const auto& e : t.entries)
        entries[py::str(word_to_string(a.alphabet(), e.cylinder))] = fraction(e.density);
    d["entries"] = entries;
    d["residual_mass"] = fraction(t.residual_mass);
    d["depth"] = t.depth;
    d["complete"] = t.complete;
    return d;
}

}  // namespace

PYBIND11_MODULE(mealymeasure, m) {
    m.doc() = "Exact analysis of Markov measures transformed by Mealy automata";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);

    py::class_<MealyAutomaton>(m, "MealyAutomaton")
        .def_static("parse", &parse_automaton, py::arg("text"))
        .def_static("load", &load_automaton, py::arg("path"))
        .def_property_readonly("alphabet",
                               [](const MealyAutomaton& a) { return a.alphabet().names(); })
        .def_property_readonly("states",
                               [](const MealyAutomaton& a) { return a.state_names(); })
        .def("apply",
             [](const MealyAutomaton& a, const std::string& state, const std::string& w) {
                 Trace t = apply_word(a, state_of(a, state), word_of(a, w));
                 return py::make_tuple(word_to_string(a.alphabet(), t.output()),
                                       a.state_name(t.end_state));
             },
             py::arg("state"), py::arg("word"),
             "run a word; returns (output word, end state)")
        .def("restriction",
             [](const MealyAutomaton& a, const std::string& state, const std::string& u) {
                 return a.state_name(restriction_state(a, state_of(a, state), word_of(a, u)));
             },
             py::arg("state"), py::arg("word"))
        .def("serialize", &serialize_automaton)
        .def("__eq__", [](const MealyAutomaton& a, const MealyAutomaton& b) { return a == b; })
        .def("__repr__", [](const MealyAutomaton& a) {
            return "<MealyAutomaton " + std::to_string(a.state_count()) + " states over " +
                   std::to_string(a.alphabet().size()) + " symbols>";
        });

    m.def("is_invertible", &is_invertible);
    m.def("invert", &invert);
    m.def("is_reversible", &is_reversible);
    m.def("reverse", &reverse);
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("compose", &compose, py::arg("a"), py::arg("b"),
          "product automaton: b post-processes a's output");

    py::class_<MarkovMeasure>(m, "MarkovMeasure")
        .def_static("parse", &parse_chain, py::arg("text"))
        .def_static("load", &load_chain, py::arg("path"))
        .def_static("bernoulli",
                    [](const std::vector<std::string>& symbols, const py::iterable& probs) {
                        std::vector<Rational> l;
                        for (auto h : probs) l.push_back(rational_from(h));
                        return bernoulli(Alphabet(symbols), ProbVector(std::move(l)));
                    },
                    py::arg("symbols"), py::arg("probs"))
        .def_property_readonly("alphabet",
                               [](const MarkovMeasure& mu) { return mu.alphabet().names(); })
        .def_property_readonly("matrix",
                               [](const MarkovMeasure& mu) { return matrix_rows(mu.matrix()); })
        .def_property_readonly(
            "initial", [](const MarkovMeasure& mu) { return fractions(mu.initial().entries()); })
        .def("cylinder",
             [](const MarkovMeasure& mu, const std::string& w) {
                 return fraction(cylinder_measure(mu, parse_word(mu.alphabet(), w)));
             },
             py::arg("word"))
        .def("is_forbidden",
             [](const MarkovMeasure& mu, const std::string& w) {
                 return is_forbidden(mu.matrix(), parse_word(mu.alphabet(), w));
             },
             py::arg("word"))
        .def_property_readonly("irreducible",
                               [](const MarkovMeasure& mu) { return is_irreducible(mu.matrix()); })
        .def_property_readonly("non_atomic", &is_non_atomic)
        .def_property_readonly("bernoulli_measure", &is_bernoulli)
        .def("reversed", &reversed_measure)
        .def("serialize", &serialize_chain);

    m.def("trivial_states", [](const MealyAutomaton& a) {
        std::vector<std::string> out;
        for (State s : trivial_states(a)) out.push_back(a.state_name(s));
        return out;
    });
    m.def("activity_count",
          [](const MealyAutomaton& a, const std::string& g, int n) {
              return py::cast(activity_count(a, state_of(a, g), n).get_str());
          },
          py::arg("automaton"), py::arg("state"), py::arg("n"),
          "R_g(n) as a decimal string");
    m.def("classify_activity", [](const MealyAutomaton& a, const std::string& g) {
        return std::string(to_string(classify_activity(a, state_of(a, g))));
    });

    m.def("skew_chain", [](const MealyAutomaton& a, const MarkovMeasure& mu) {
        SkewChain sc = make_skew_chain(a, mu);
        py::dict d;
        py::list pair_labels;
        for (int i = 0; i < a.pair_count(); ++i) pair_labels.append(a.pair_label(i));
        d["pairs"] = pair_labels;
        d["T"] = matrix_rows(sc.T);
        d["K"] = matrix_rows(sc.K);
        d["t"] = sc.t ? py::object(fractions(sc.t->entries())) : py::object(py::none());
        d["k"] = sc.k ? py::object(fractions(sc.k->entries())) : py::object(py::none());
        d["t_classes"] = sc.t_classes;
        d["k_classes"] = sc.k_classes;
        d["tensor_decomposes"] =
            (sc.t && sc.k) ? py::object(py::bool_(tensor_decomposes(sc))) : py::object(py::none());
        return d;
    });
    m.def("is_L_strongly_connected", [](const MealyAutomaton& a, const MarkovMeasure& mu) {
        return is_L_strongly_connected(a, mu.matrix());
    });

    m.def("output_word_frequency",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu,
             const std::string& u) {
              return fraction(output_word_frequency(a, state_of(a, g), mu, word_of(a, u)));
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("word"));
    m.def("left_word_frequency",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu,
             const std::string& u) {
              return fraction(left_word_frequency(a, state_of(a, g), mu, word_of(a, u)));
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("word"));
    m.def("frequency_vector",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu) {
              return fractions(frequency_vector(a, state_of(a, g), mu).entries());
          });

    m.def("pushforward_cylinder",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu,
             const std::string& w) {
              return fraction(pushforward_cylinder(a, state_of(a, g), mu, word_of(a, w)));
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("word"));
    m.def("enumerate_vmax",
          [](const MealyAutomaton& a, const std::string& g, int depth,
             const MarkovMeasure* mu) {
              return vmax_dict(a, mu ? enumerate_vmax(a, state_of(a, g), depth, *mu)
                                     : enumerate_vmax(a, state_of(a, g), depth));
          },
          py::arg("automaton"), py::arg("state"), py::arg("depth"),
          py::arg("chain") = static_cast<const MarkovMeasure*>(nullptr));
    m.def("radon_nikodym",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu, int depth) {
              return table_dict(a, radon_nikodym(a, state_of(a, g), mu, depth));
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("depth"));
    m.def("check_abs_continuity_sufficient",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu) {
              return check_abs_continuity_sufficient(a, state_of(a, g), mu);
          });

    m.def("equality_check_bernoulli",
          [](const MealyAutomaton& a, const std::string& g, const py::iterable& probs) {
              std::vector<Rational> l;
              for (auto h : probs) l.push_back(rational_from(h));
              return equality_check_bernoulli(a, state_of(a, g), ProbVector(std::move(l)));
          });
    m.def("equality_check_markov",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu) {
              return equality_check_markov(a, state_of(a, g), mu);
          });
    m.def("singularity_witness",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu,
             int max_len) -> py::object {
              auto w = singularity_witness(a, state_of(a, g), mu, max_len);
              if (!w) return py::none();
              return py::str(word_to_string(a.alphabet(), *w));
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("max_len"));
    m.def("verdict",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu,
             int witness_max_len, int rn_depth) {
              VerdictOptions opts;
              opts.witness_max_len = witness_max_len;
              opts.rn_depth = rn_depth;
              Verdict v = verdict(a, state_of(a, g), mu, opts);
              py::dict d;
              d["kind"] = std::string(to_string(v.kind));
              d["rule"] = v.rule;
              d["evidence"] = v.evidence;
              d["witness"] = v.witness
                                 ? py::object(py::str(word_to_string(a.alphabet(), *v.witness)))
                                 : py::object(py::none());
              d["table"] = v.table ? py::object(table_dict(a, *v.table)) : py::object(py::none());
              return d;
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"),
          py::arg("witness_max_len") = 4, py::arg("rn_depth") = 8);

    m.def("splitmix64",
          [](uint64_t seed, int count) {
              Prng rng(seed);
              std::vector<uint64_t> out;
              out.reserve(count);
              for (int i = 0; i < count; ++i) out.push_back(rng.next());
              return out;
          },
          py::arg("seed"), py::arg("count"), "raw PRNG outputs, for cross-checking");
    m.def("sample_sequence",
          [](const MarkovMeasure& mu, int n, uint64_t seed) {
              return word_to_string(mu.alphabet(), sample_sequence(mu, n, seed));
          },
          py::arg("chain"), py::arg("n"), py::arg("seed"));
    m.def("run_automaton_stream",
          [](const MealyAutomaton& a, const std::string& g, const std::string& w) {
              return word_to_string(a.alphabet(),
                                    run_automaton_stream(a, state_of(a, g), word_of(a, w)));
          });
    m.def("empirical_frequency", [](const MealyAutomaton& a, const std::string& w,
                                    const std::string& u) {
        return fraction(empirical_frequency(word_of(a, w), word_of(a, u)));
    });
    m.def("monte_carlo_report",
          [](const MealyAutomaton& a, const std::string& g, const MarkovMeasure& mu, int n,
             uint64_t seed, const std::vector<std::string>& queries) {
              std::vector<Word> qs;
              for (const auto& q : queries) qs.push_back(word_of(a, q));
              SimulationReport rep = monte_carlo_report(a, state_of(a, g), mu, n, seed, qs);
              py::dict d;
              d["seed"] = rep.seed;
              d["steps"] = rep.steps;
              py::dict per_word;
              for (const auto& q : rep.queries) {
                  py::dict row;
                  row["empirical"] = fraction(q.empirical);
                  row["predicted"] = fraction(q.predicted);
                  row["deviation"] = fraction(q.deviation);
                  per_word[py::str(word_to_string(a.alphabet(), q.word))] = row;
              }
              d["queries"] = per_word;
              return d;
          },
          py::arg("automaton"), py::arg("state"), py::arg("chain"), py::arg("n"), py::arg("seed"),
          py::arg("queries"));
}
