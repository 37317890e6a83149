#include "mealymeasure/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "mealymeasure/activity.hpp"
#include "mealymeasure/classify.hpp"
#include "mealymeasure/errors.hpp"
#include "mealymeasure/frequency.hpp"
#include "mealymeasure/pushforward.hpp"
#include "mealymeasure/simulate.hpp"
#include "mealymeasure/skew.hpp"

namespace mealy {

namespace {

// Ordered key-value document; printed one "key = value" line at a time.
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;

    void set(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    void set(const std::string& key, const char* value) { lines.emplace_back(key, value); }
    void set(const std::string& key, bool value) { lines.emplace_back(key, value ? "true" : "false"); }
    void set(const std::string& key, int value) { lines.emplace_back(key, std::to_string(value)); }
    void set(const std::string& key, uint64_t value) { lines.emplace_back(key, std::to_string(value)); }
    void set(const std::string& key, const Rational& value) { lines.emplace_back(key, to_string(value)); }

    void print(std::ostream& out) const {
        for (const auto& [k, v] : lines) out << k << " = " << v << "\n";
    }
};

struct CommonArgs {
    std::string automaton_path;
    std::string chain_path;
    std::string state_name;
    bool json = false;
};

struct Loaded {
    MealyAutomaton automaton;
    MarkovMeasure chain;
    State g;
};

Loaded load(const CommonArgs& args) {
    MealyAutomaton a = load_automaton(args.automaton_path);
    MarkovMeasure mu = load_chain(args.chain_path);
    if (a.alphabet() != mu.alphabet())
        throw PreconditionError("automaton and chain alphabets differ");
    State g = 0;
    if (!args.state_name.empty()) {
        auto found = a.find_state(args.state_name);
        if (!found) throw std::invalid_argument("unknown state '" + args.state_name + "'");
        g = *found;
    }
    return {std::move(a), std::move(mu), g};
}

void add_inputs(Report& r, const CommonArgs& args, const MealyAutomaton* a = nullptr,
                State g = -1) {
    r.set("inputs.automaton", args.automaton_path);
    if (!args.chain_path.empty()) r.set("inputs.chain", args.chain_path);
    if (a && g >= 0) r.set("inputs.state", a->state_name(g));
}

std::string row_string(const StochasticMatrix& m, int i) {
    std::string out;
    for (int j = 0; j < m.size(); ++j) {
        if (j) out += " ";
        out += to_string(m.at(i, j));
    }
    return out;
}

int cmd_validate(const CommonArgs& args, std::ostream& out) {
    Loaded in = load(args);
    Report r;
    add_inputs(r, args);
    r.set("result.invertible", is_invertible(in.automaton));
    r.set("result.reversible", is_reversible(in.automaton));
    r.set("result.strongly_connected", is_strongly_connected(in.automaton));
    r.set("result.L_strongly_connected",
          is_L_strongly_connected(in.automaton, in.chain.matrix()));
    r.set("result.irreducible_L", is_irreducible(in.chain.matrix()));
    r.set("result.non_atomic_mu", is_non_atomic(in.chain));
    r.print(out);
    return 0;
}

int cmd_info(const CommonArgs& args, std::ostream& out) {
    MealyAutomaton a = load_automaton(args.automaton_path);
    Report r;
    r.set("inputs.automaton", args.automaton_path);
    if (!args.chain_path.empty()) r.set("inputs.chain", args.chain_path);

    std::string alpha, states, trivial;
    for (const auto& s : a.alphabet().names()) alpha += (alpha.empty() ? "" : " ") + s;
    for (const auto& s : a.state_names()) states += (states.empty() ? "" : " ") + s;
    auto triv = trivial_states(a);
    for (State s : triv) trivial += (trivial.empty() ? "" : " ") + a.state_name(s);

    r.set("result.alphabet", alpha);
    r.set("result.states", states);
    r.set("result.trivial_states", trivial);
    r.set("result.invertible", is_invertible(a));
    r.set("result.reversible", is_reversible(a));
    r.set("result.strongly_connected", is_strongly_connected(a));
    for (State s = 0; s < a.state_count(); ++s)
        r.set("result.activity." + a.state_name(s), to_string(classify_activity(a, s)));

    if (!args.chain_path.empty()) {
        MarkovMeasure mu = load_chain(args.chain_path);
        if (a.alphabet() != mu.alphabet())
            throw PreconditionError("automaton and chain alphabets differ");
        r.set("result.irreducible_L", is_irreducible(mu.matrix()));
        r.set("result.non_atomic_mu", is_non_atomic(mu));
        r.set("result.L_strongly_connected", is_L_strongly_connected(a, mu.matrix()));
    }
    r.print(out);
    return 0;
}

void print_matrix_block(std::ostream& out, const std::string& name, const StochasticMatrix& m,
                        const std::vector<std::string>& labels) {
    size_t width = 1;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) width = std::max(width, to_string(m.at(i, j)).size());
    size_t label_width = 1;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    out << "# " << name << ":\n";
    for (int i = 0; i < m.size(); ++i) {
        out << "#   " << std::setw(static_cast<int>(label_width)) << labels[i] << " |";
        for (int j = 0; j < m.size(); ++j)
            out << " " << std::setw(static_cast<int>(width)) << to_string(m.at(i, j));
        out << "\n";
    }
}

int cmd_matrices(const CommonArgs& args, std::ostream& out) {
    Loaded in = load(args);
    SkewChain sc = make_skew_chain(in.automaton, in.chain);
    const MealyAutomaton& a = in.automaton;

    Report r;
    add_inputs(r, args);
    std::vector<std::string> pair_labels, state_labels;
    for (int i = 0; i < a.pair_count(); ++i) pair_labels.push_back(a.pair_label(i));
    for (State s = 0; s < a.state_count(); ++s) state_labels.push_back(a.state_name(s));

    for (int i = 0; i < sc.T.size(); ++i) r.set("result.T." + pair_labels[i], row_string(sc.T, i));
    for (int i = 0; i < sc.K.size(); ++i) r.set("result.K." + state_labels[i], row_string(sc.K, i));

    if (sc.t)
        r.set("result.t", to_string(sc.t->entries()));
    else {
        r.set("result.t", "unavailable");
        for (size_t c = 0; c < sc.t_classes.size(); ++c) {
            std::string line;
            for (int idx : sc.t_classes[c]) line += (line.empty() ? "" : " ") + pair_labels[idx];
            r.set("result.t_classes." + std::to_string(c), line);
        }
    }
    if (sc.k)
        r.set("result.k", to_string(sc.k->entries()));
    else {
        r.set("result.k", "unavailable");
        for (size_t c = 0; c < sc.k_classes.size(); ++c) {
            std::string line;
            for (int idx : sc.k_classes[c]) line += (line.empty() ? "" : " ") + state_labels[idx];
            r.set("result.k_classes." + std::to_string(c), line);
        }
    }
    if (sc.t && sc.k)
        r.set("result.tensor_decomposes", tensor_decomposes(sc));
    else
        r.set("result.tensor_decomposes", "unavailable");

    r.print(out);
    if (!args.json) {
        print_matrix_block(out, "T", sc.T, pair_labels);
        print_matrix_block(out, "K", sc.K, state_labels);
    }
    if (!sc.t || !sc.k) return 3;
    return 0;
}

int cmd_freq(const CommonArgs& args, const std::vector<std::string>& words, std::ostream& out) {
    Loaded in = load(args);
    SkewChain sc = make_skew_chain(in.automaton, in.chain);

    std::vector<Word> queries;
    if (words.empty()) {
        for (Symbol x = 0; x < in.automaton.alphabet().size(); ++x) queries.push_back({x});
    } else {
        for (const auto& w : words) queries.push_back(parse_word(in.automaton.alphabet(), w));
    }

    Report r;
    add_inputs(r, args, &in.automaton, in.g);
    bool reversible = is_reversible(in.automaton);
    r.set("flags.L_strongly_connected", is_irreducible(sc.T));
    r.set("flags.reversible_path_used", reversible);
    for (const auto& u : queries) {
        Rational f = output_word_frequency(sc, u);
        if (reversible) {
            Rational left = left_word_frequency(in.automaton, in.g, in.chain, u);
            if (left != f)
                throw PreconditionError("left/right frequency cross-check failed for '" +
                                        word_to_string(in.automaton.alphabet(), u) + "'");
        }
        r.set("result.freq." + word_to_string(in.automaton.alphabet(), u), f);
    }
    r.print(out);
    return 0;
}

int cmd_push(const CommonArgs& args, const std::string& word, std::ostream& out) {
    Loaded in = load(args);
    Word w = parse_word(in.automaton.alphabet(), word);
    Report r;
    add_inputs(r, args, &in.automaton, in.g);
    r.set("result.pushforward", pushforward_cylinder(in.automaton, in.g, in.chain, w));
    r.set("result.mu_measure", cylinder_measure(in.chain, w));
    r.print(out);
    return 0;
}

int cmd_rn(const CommonArgs& args, int depth, std::ostream& out) {
    Loaded in = load(args);
    RadonNikodymTable table = radon_nikodym(in.automaton, in.g, in.chain, depth);
    Report r;
    add_inputs(r, args, &in.automaton, in.g);
    r.set("flags.depth", depth);
    r.set("result.complete", table.complete);
    r.set("result.residual_mass", table.residual_mass);
    r.set("result.entries", static_cast<int>(table.entries.size()));
    for (const auto& e : table.entries)
        r.set("result.density." + word_to_string(in.automaton.alphabet(), e.cylinder), e.density);
    r.print(out);
    return 0;
}

int cmd_verdict(const CommonArgs& args, const VerdictOptions& opts, std::ostream& out) {
    Loaded in = load(args);
    Verdict v = verdict(in.automaton, in.g, in.chain, opts);
    Report r;
    add_inputs(r, args, &in.automaton, in.g);
    r.set("flags.witness_max_len", opts.witness_max_len);
    r.set("flags.rn_depth", opts.rn_depth);
    r.set("result.kind", to_string(v.kind));
    r.set("result.rule", v.rule);
    if (v.witness)
        r.set("result.witness", word_to_string(in.automaton.alphabet(), *v.witness));
    for (size_t i = 0; i < v.evidence.size(); ++i)
        r.set("result.evidence." + std::to_string(i), v.evidence[i]);
    if (v.table) {
        r.set("result.residual_mass", v.table->residual_mass);
        for (const auto& e : v.table->entries)
            r.set("result.density." + word_to_string(in.automaton.alphabet(), e.cylinder),
                  e.density);
    }
    r.print(out);
    return 0;
}

int cmd_simulate(const CommonArgs& args, int steps, uint64_t seed,
                 const std::vector<std::string>& words, std::ostream& out) {
    Loaded in = load(args);
    std::vector<Word> queries;
    if (words.empty()) {
        for (Symbol x = 0; x < in.automaton.alphabet().size(); ++x) queries.push_back({x});
    } else {
        for (const auto& w : words) queries.push_back(parse_word(in.automaton.alphabet(), w));
    }

    SimulationReport rep = monte_carlo_report(in.automaton, in.g, in.chain, steps, seed, queries);
    Report r;
    add_inputs(r, args, &in.automaton, in.g);
    r.set("flags.steps", rep.steps);
    r.set("flags.seed", rep.seed);
    for (const auto& q : rep.queries) {
        std::string w = word_to_string(in.automaton.alphabet(), q.word);
        r.set("result.empirical." + w, q.empirical);
        r.set("result.predicted." + w, q.predicted);
        r.set("result.deviation." + w, q.deviation);
    }
    r.print(out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of Markov measures transformed by Mealy automata"};
    app.require_subcommand(1);

    CommonArgs common;
    std::vector<std::string> words;
    std::string push_word;
    int depth = 8;
    VerdictOptions vopts;
    int steps = 100000;
    uint64_t seed = 42;

    auto add_common = [&](CLI::App* sub, bool need_chain, bool has_state) {
        sub->add_option("--automaton", common.automaton_path, "automaton file")
            ->required();
        auto* chain = sub->add_option("--chain", common.chain_path, "chain file");
        if (need_chain) chain->required();
        if (has_state)
            sub->add_option("--state", common.state_name, "acting state (default: first)");
        sub->add_flag("--json", common.json, "structured key = value output only");
        return sub;
    };

    auto* validate = add_common(app.add_subcommand("validate", "check structural properties"),
                                true, false);
    auto* info = add_common(app.add_subcommand("info", "summarize an automaton"), false, false);
    auto* matrices =
        add_common(app.add_subcommand("matrices", "skew chain matrices T, K and vectors t, k"),
                   true, false);
    auto* freq = add_common(
        app.add_subcommand("freq", "asymptotic output word frequencies"), true, true);
    freq->add_option("--word", words, "queried word (repeatable; default: single letters)");
    auto* push = add_common(
        app.add_subcommand("push", "pushforward measure of an output cylinder"), true, true);
    push->add_option("--word", push_word, "output cylinder word")->required();
    auto* rn = add_common(
        app.add_subcommand("rn", "truncated Radon-Nikodym density table"), true, true);
    rn->add_option("--depth", depth, "truncation depth (default 8)");
    auto* verdict_cmd = add_common(
        app.add_subcommand("verdict", "measure relation between mu and its image"), true, true);
    verdict_cmd->add_option("--max-len", vopts.witness_max_len,
                            "witness search length bound (default 4)");
    verdict_cmd->add_option("--rn-depth", vopts.rn_depth,
                            "density table depth for the polynomial rule (default 8)");
    auto* simulate = add_common(
        app.add_subcommand("simulate", "seeded Monte Carlo frequency comparison"), true, true);
    simulate->add_option("--steps", steps, "sequence length (default 100000)");
    simulate->add_option("--seed", seed, "PRNG seed (default 42)");
    simulate->add_option("--word", words, "queried word (repeatable; default: single letters)");

    std::vector<const char*> argv;
    argv.push_back("mealymeasure");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(common, out);
        if (app.got_subcommand(info)) return cmd_info(common, out);
        if (app.got_subcommand(matrices)) return cmd_matrices(common, out);
        if (app.got_subcommand(freq)) return cmd_freq(common, words, out);
        if (app.got_subcommand(push)) return cmd_push(common, push_word, out);
        if (app.got_subcommand(rn)) return cmd_rn(common, depth, out);
        if (app.got_subcommand(verdict_cmd)) return cmd_verdict(common, vopts, out);
        if (app.got_subcommand(simulate)) return cmd_simulate(common, steps, seed, words, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace mealy
