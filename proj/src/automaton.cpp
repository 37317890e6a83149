#include "mealymeasure/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "mealymeasure/digraph.hpp"

namespace mealy {

Alphabet::Alphabet(std::vector<std::string> symbols) : names_(std::move(symbols)) {
    if (names_.size() < 2) throw PreconditionError("alphabet needs at least two symbols");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty()) throw PreconditionError("empty alphabet symbol");
        if (!index_.emplace(names_[i], i).second)
            throw PreconditionError("duplicate alphabet symbol '" + names_[i] + "'");
    }
}

std::optional<Symbol> Alphabet::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string word_to_string(const Alphabet& a, const Word& w) {
    bool single = true;
    for (const auto& n : a.names())
        if (n.size() != 1) single = false;
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ',';
        out += a.name(w[i]);
    }
    return out;
}

Word parse_word(const Alphabet& a, const std::string& text) {
    bool single = true;
    for (const auto& n : a.names())
        if (n.size() != 1) single = false;
    Word w;
    if (single && text.find(',') == std::string::npos) {
        for (char c : text) {
            auto x = a.find(std::string(1, c));
            if (!x) throw std::invalid_argument("unknown symbol '" + std::string(1, c) + "'");
            w.push_back(*x);
        }
        return w;
    }
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto x = a.find(tok);
        if (!x) throw std::invalid_argument("unknown symbol '" + tok + "'");
        w.push_back(*x);
    }
    return w;
}

MealyAutomaton::MealyAutomaton(Alphabet alphabet, std::vector<std::string> state_names,
                               std::vector<State> transition, std::vector<Symbol> output)
    : alphabet_(std::move(alphabet)),
      state_names_(std::move(state_names)),
      transition_(std::move(transition)),
      output_(std::move(output)) {
    int n = state_count(), m = alphabet_.size();
    if (n == 0) throw PreconditionError("automaton needs at least one state");
    for (int i = 0; i < n; ++i) {
        if (state_names_[i].empty()) throw PreconditionError("empty state name");
        if (!state_index_.emplace(state_names_[i], i).second)
            throw PreconditionError("duplicate state name '" + state_names_[i] + "'");
    }
    if (static_cast<int>(transition_.size()) != n * m ||
        static_cast<int>(output_.size()) != n * m)
        throw PreconditionError("transition/output tables must cover every (state, symbol) pair");
    for (State s : transition_)
        if (s < 0 || s >= n) throw PreconditionError("transition target out of range");
    for (Symbol x : output_)
        if (x < 0 || x >= m) throw PreconditionError("output symbol out of range");
}

std::optional<State> MealyAutomaton::find_state(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::string MealyAutomaton::pair_label(int idx) const {
    auto [s, x] = pair_of(idx);
    return "(" + state_names_[s] + "," + alphabet_.name(x) + ")";
}

bool MealyAutomaton::operator==(const MealyAutomaton& other) const {
    return alphabet_ == other.alphabet_ && state_names_ == other.state_names_ &&
           transition_ == other.transition_ && output_ == other.output_;
}

Word Trace::output() const {
    Word w;
    w.reserve(steps.size());
    for (const auto& st : steps) w.push_back(st.out);
    return w;
}

Trace apply_word(const MealyAutomaton& a, State s, const Word& w) {
    Trace t;
    t.steps.reserve(w.size());
    State cur = s;
    for (Symbol x : w) {
        t.steps.push_back({cur, x, a.out(cur, x)});
        cur = a.next(cur, x);
    }
    t.end_state = cur;
    return t;
}

Word apply_output(const MealyAutomaton& a, State s, const Word& w) {
    Word out;
    out.reserve(w.size());
    State cur = s;
    for (Symbol x : w) {
        out.push_back(a.out(cur, x));
        cur = a.next(cur, x);
    }
    return out;
}

State restriction_state(const MealyAutomaton& a, State s, const Word& u) {
    State cur = s;
    for (Symbol x : u) cur = a.next(cur, x);
    return cur;
}

bool is_invertible(const MealyAutomaton& a) {
    int m = a.alphabet().size();
    for (State s = 0; s < a.state_count(); ++s) {
        std::vector<bool> seen(m, false);
        for (Symbol x = 0; x < m; ++x) {
            Symbol y = a.out(s, x);
            if (seen[y]) return false;
            seen[y] = true;
        }
    }
    return true;
}

MealyAutomaton invert(const MealyAutomaton& a) {
    int m = a.alphabet().size();
    std::vector<State> trans(a.pair_count());
    std::vector<Symbol> out(a.pair_count());
    for (State s = 0; s < a.state_count(); ++s) {
        std::vector<bool> seen(m, false);
        for (Symbol x = 0; x < m; ++x) {
            Symbol y = a.out(s, x);
            if (seen[y])
                throw PreconditionError("not invertible: state '" + a.state_name(s) +
                                        "' repeats output '" + a.alphabet().name(y) + "'");
            seen[y] = true;
            // edge s -x|y-> s' becomes s -y|x-> s'
            trans[s * m + y] = a.next(s, x);
            out[s * m + y] = x;
        }
    }
    return MealyAutomaton(a.alphabet(), a.state_names(), std::move(trans), std::move(out));
}

bool is_reversible(const MealyAutomaton& a) {
    int m = a.alphabet().size();
    for (Symbol x = 0; x < m; ++x) {
        std::vector<int> incoming(a.state_count(), 0);
        for (State s = 0; s < a.state_count(); ++s) incoming[a.next(s, x)]++;
        for (int c : incoming)
            if (c != 1) return false;
    }
    return true;
}

MealyAutomaton reverse(const MealyAutomaton& a) {
    int m = a.alphabet().size();
    std::vector<State> trans(a.pair_count(), -1);
    std::vector<Symbol> out(a.pair_count());
    for (Symbol x = 0; x < m; ++x) {
        for (State s = 0; s < a.state_count(); ++s) {
            State to = a.next(s, x);
            if (trans[to * m + x] != -1)
                throw PreconditionError("not reversible: state '" + a.state_name(to) +
                                        "' has several incoming transitions on input '" +
                                        a.alphabet().name(x) + "'");
            trans[to * m + x] = s;
            out[to * m + x] = a.out(s, x);
        }
        for (State s = 0; s < a.state_count(); ++s)
            if (trans[s * m + x] == -1)
                throw PreconditionError("not reversible: state '" + a.state_name(s) +
                                        "' has no incoming transition on input '" +
                                        a.alphabet().name(x) + "'");
    }
    return MealyAutomaton(a.alphabet(), a.state_names(), std::move(trans), std::move(out));
}

bool is_strongly_connected(const MealyAutomaton& a) {
    std::vector<std::vector<int>> adj(a.state_count());
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < a.alphabet().size(); ++x) adj[s].push_back(a.next(s, x));
    return is_strongly_connected_graph(adj);
}

MealyAutomaton compose(const MealyAutomaton& a, const MealyAutomaton& b) {
    if (a.alphabet() != b.alphabet())
        throw PreconditionError("compose: alphabets differ");
    int m = a.alphabet().size();
    int nb = b.state_count();

    // Every pair is reachable from itself, so the reachable subset seeded
    // with all pairs is the full product; pairs are kept in lexicographic
    // order for stable indexing.
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(a.state_count()) * nb);
    for (State p = 0; p < a.state_count(); ++p)
        for (State q = 0; q < nb; ++q) names.push_back(a.state_name(p) + "." + b.state_name(q));

    std::vector<State> trans;
    std::vector<Symbol> out;
    trans.reserve(names.size() * m);
    out.reserve(names.size() * m);
    for (State p = 0; p < a.state_count(); ++p) {
        for (State q = 0; q < nb; ++q) {
            for (Symbol x = 0; x < m; ++x) {
                Symbol y = a.out(p, x);
                trans.push_back(a.next(p, x) * nb + b.next(q, y));
                out.push_back(b.out(q, y));
            }
        }
    }
    return MealyAutomaton(a.alphabet(), std::move(names), std::move(trans), std::move(out));
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::stringstream ss(text);
    std::string raw;
    int number = 0;
    while (std::getline(ss, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::stringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

MealyAutomaton parse_automaton(const std::string& text) {
    auto lines = tokenize(text);
    size_t i = 0;

    if (i >= lines.size()) throw ParseError(0, "empty automaton file");
    if (lines[i].tokens[0] != "alphabet")
        throw ParseError(lines[i].number, "expected 'alphabet' line");
    if (lines[i].tokens.size() < 3)
        throw ParseError(lines[i].number, "alphabet needs at least two symbols");
    Alphabet alphabet;
    try {
        alphabet = Alphabet({lines[i].tokens.begin() + 1, lines[i].tokens.end()});
    } catch (const PreconditionError& e) {
        throw ParseError(lines[i].number, e.what());
    }
    ++i;

    if (i >= lines.size() || lines[i].tokens[0] != "states")
        throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                         "expected 'states' line");
    if (lines[i].tokens.size() < 2) throw ParseError(lines[i].number, "states line is empty");
    std::vector<std::string> state_names(lines[i].tokens.begin() + 1, lines[i].tokens.end());
    {
        std::unordered_map<std::string, int> seen;
        for (const auto& n : state_names)
            if (!seen.emplace(n, 0).second)
                throw ParseError(lines[i].number, "duplicate state '" + n + "'");
    }
    ++i;

    int n = static_cast<int>(state_names.size()), m = alphabet.size();
    std::unordered_map<std::string, State> state_index;
    for (int s = 0; s < n; ++s) state_index[state_names[s]] = s;

    std::vector<State> trans(n * m, -1);
    std::vector<Symbol> out(n * m, -1);
    int defined = 0;
    int last_line = lines.back().number;

    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "edge")
            throw ParseError(line.number, "unknown token '" + line.tokens[0] + "'");
        if (line.tokens.size() != 5)
            throw ParseError(line.number,
                             "malformed line: expected 'edge <state> <in> <next-state> <out>'");
        auto sit = state_index.find(line.tokens[1]);
        if (sit == state_index.end())
            throw ParseError(line.number, "unknown state '" + line.tokens[1] + "'");
        auto in = alphabet.find(line.tokens[2]);
        if (!in) throw ParseError(line.number, "unknown symbol '" + line.tokens[2] + "'");
        auto nit = state_index.find(line.tokens[3]);
        if (nit == state_index.end())
            throw ParseError(line.number, "unknown state '" + line.tokens[3] + "'");
        auto y = alphabet.find(line.tokens[4]);
        if (!y) throw ParseError(line.number, "unknown symbol '" + line.tokens[4] + "'");

        int idx = sit->second * m + *in;
        if (trans[idx] != -1)
            throw ParseError(line.number, "duplicate edge for state '" + line.tokens[1] +
                                              "', symbol '" + line.tokens[2] + "'");
        trans[idx] = nit->second;
        out[idx] = *y;
        ++defined;
    }

    if (defined != n * m) {
        for (int s = 0; s < n; ++s)
            for (Symbol x = 0; x < m; ++x)
                if (trans[s * m + x] == -1)
                    throw ParseError(last_line, "missing edge for state '" + state_names[s] +
                                                    "', symbol '" + alphabet.name(x) + "'");
    }

    return MealyAutomaton(std::move(alphabet), std::move(state_names), std::move(trans),
                          std::move(out));
}

std::string serialize_automaton(const MealyAutomaton& a) {
    std::string out = "alphabet";
    for (const auto& s : a.alphabet().names()) out += " " + s;
    out += "\nstates";
    for (const auto& s : a.state_names()) out += " " + s;
    out += "\n";
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol x = 0; x < a.alphabet().size(); ++x)
            out += "edge " + a.state_name(s) + " " + a.alphabet().name(x) + " " +
                   a.state_name(a.next(s, x)) + " " + a.alphabet().name(a.out(s, x)) + "\n";
    return out;
}

MealyAutomaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open automaton file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

}  // namespace mealy
