#include "mealymeasure/markov.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mealymeasure/digraph.hpp"
#include "mealymeasure/errors.hpp"

namespace mealy {

ProbVector::ProbVector(std::vector<Rational> entries) : v_(std::move(entries)) {
    Rational sum = 0;
    for (const auto& e : v_) {
        if (e < 0) throw PreconditionError("probability vector has a negative entry");
        sum += e;
    }
    if (sum != 1) throw PreconditionError("probability vector entries sum to " + to_string(sum) +
                                          ", expected 1");
}

bool ProbVector::positive() const {
    for (const auto& e : v_)
        if (e <= 0) return false;
    return true;
}

StochasticMatrix::StochasticMatrix(int n, std::vector<Rational> entries)
    : n_(n), e_(std::move(entries)) {
    if (n_ <= 0 || static_cast<int>(e_.size()) != n_ * n_)
        throw PreconditionError("stochastic matrix must be square");
    for (int i = 0; i < n_; ++i) {
        Rational sum = 0;
        for (int j = 0; j < n_; ++j) {
            if (at(i, j) < 0) throw PreconditionError("stochastic matrix has a negative entry");
            sum += at(i, j);
        }
        if (sum != 1)
            throw PreconditionError("row " + std::to_string(i) + " sums to " + to_string(sum) +
                                    ", expected 1");
    }
}

namespace {

std::vector<Rational> flatten_rows(const std::vector<std::vector<Rational>>& rows) {
    std::vector<Rational> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw PreconditionError("stochastic matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

StochasticMatrix::StochasticMatrix(const std::vector<std::vector<Rational>>& rows)
    : StochasticMatrix(static_cast<int>(rows.size()), flatten_rows(rows)) {}

std::vector<std::vector<int>> StochasticMatrix::positive_digraph() const {
    std::vector<std::vector<int>> adj(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) > 0) adj[i].push_back(j);
    return adj;
}

MarkovMeasure::MarkovMeasure(Alphabet alphabet, StochasticMatrix L, ProbVector initial)
    : alphabet_(std::move(alphabet)), L_(std::move(L)), l_(std::move(initial)) {
    if (L_.size() != alphabet_.size() || l_.size() != alphabet_.size())
        throw PreconditionError("chain dimensions do not match the alphabet");
    if (!is_stationary(l_, L_))
        throw PreconditionError("initial vector is not stationary for L");
}

MarkovMeasure MarkovMeasure::unchecked(Alphabet alphabet, StochasticMatrix L,
                                       ProbVector initial) {
    MarkovMeasure mu;
    mu.alphabet_ = std::move(alphabet);
    mu.L_ = std::move(L);
    mu.l_ = std::move(initial);
    if (mu.L_.size() != mu.alphabet_.size() || mu.l_.size() != mu.alphabet_.size())
        throw PreconditionError("chain dimensions do not match the alphabet");
    return mu;
}

std::vector<Rational> left_multiply(const std::vector<Rational>& v, const StochasticMatrix& m) {
    std::vector<Rational> out(m.size(), Rational(0));
    for (int i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.size(); ++j)
            if (m.at(i, j) != 0) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

bool is_stationary(const ProbVector& v, const StochasticMatrix& m) {
    if (v.size() != m.size()) return false;
    return left_multiply(v.entries(), m) == v.entries();
}

std::vector<std::vector<int>> recurrent_classes(const StochasticMatrix& m) {
    auto adj = m.positive_digraph();
    auto scc = strongly_connected_components(adj);
    auto sinks = sink_components(adj, scc);
    std::vector<std::vector<int>> classes;
    for (int c : sinks) {
        std::vector<int> members;
        for (int v = 0; v < m.size(); ++v)
            if (scc.comp[v] == c) members.push_back(v);
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

namespace {

std::string format_classes(const std::vector<std::vector<int>>& classes) {
    std::string out;
    for (size_t i = 0; i < classes.size(); ++i) {
        out += i ? " {" : "{";
        for (size_t j = 0; j < classes[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(classes[i][j]);
        }
        out += "}";
    }
    return out;
}

// Solves the n x n rational system a*x = b in place; a is row-major.
// Returns false if singular.
bool solve_linear(std::vector<Rational>& a, std::vector<Rational>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
            std::swap(b[pivot], b[col]);
        }
        Rational inv = a[col * n + col];
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0) continue;
            Rational factor = a[r * n + col] / inv;
            for (int j = col; j < n; ++j) a[r * n + j] -= factor * a[col * n + j];
            b[r] -= factor * b[col];
        }
    }
    for (int i = 0; i < n; ++i) b[i] /= a[i * n + i];
    return true;
}

}  // namespace

ProbVector stationary_vector(const StochasticMatrix& m) {
    auto classes = recurrent_classes(m);
    if (classes.size() != 1)
        throw PreconditionError("stationary vector is not unique: " +
                                std::to_string(classes.size()) + " recurrent classes " +
                                format_classes(classes));

    // The stationary vector is supported on the single recurrent class R.
    // Solve v*M_RR = v, sum(v) = 1 on R: transpose, replace the last row by
    // the normalization constraint.
    const auto& rec = classes[0];
    int k = static_cast<int>(rec.size());
    std::vector<Rational> a(k * k, Rational(0)), b(k, Rational(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            a[i * k + j] = m.at(rec[j], rec[i]);  // transposed
            if (i == j) a[i * k + j] -= 1;
        }
    for (int j = 0; j < k; ++j) a[(k - 1) * k + j] = 1;
    b[k - 1] = 1;

    if (!solve_linear(a, b, k))
        throw PreconditionError("stationary solve failed: singular system");

    std::vector<Rational> v(m.size(), Rational(0));
    for (int i = 0; i < k; ++i) v[rec[i]] = b[i];
    return ProbVector(std::move(v));
}

bool is_irreducible(const StochasticMatrix& m) {
    return is_strongly_connected_graph(m.positive_digraph());
}

Rational cylinder_measure(const MarkovMeasure& mu, const Word& w) {
    if (w.empty()) return 1;
    Rational r = mu.initial()[w[0]];
    for (size_t i = 1; i < w.size() && r != 0; ++i) r *= mu.matrix().at(w[i - 1], w[i]);
    return r;
}

bool is_forbidden(const StochasticMatrix& L, const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (L.at(w[i - 1], w[i]) == 0) return true;
    return false;
}

bool is_non_atomic(const MarkovMeasure& mu) {
    const auto& L = mu.matrix();
    int n = L.size();

    // Symbols lying on a cycle of probability-1 transitions. Each symbol has
    // at most one outgoing 1-transition, so following them either dies or
    // cycles.
    std::vector<int> one_step(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.at(x, y) == 1) one_step[x] = y;

    std::vector<bool> on_one_cycle(n, false);
    for (int x = 0; x < n; ++x) {
        std::vector<int> seen(n, 0);
        int cur = x;
        while (cur != -1 && !seen[cur]) {
            seen[cur] = 1;
            cur = one_step[cur];
        }
        if (cur == x) on_one_cycle[x] = true;
    }

    // Atom <=> some positive-probability path from a positive-mass initial
    // symbol reaches such a cycle.
    auto adj = L.positive_digraph();
    std::vector<bool> reach(n, false);
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
        if (mu.initial()[x] > 0) {
            reach[x] = true;
            queue.push_back(x);
        }
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        if (on_one_cycle[x]) return false;
        for (int y : adj[x])
            if (!reach[y]) {
                reach[y] = true;
                queue.push_back(y);
            }
    }
    return true;
}

StochasticMatrix reversed_chain(const StochasticMatrix& L, const ProbVector& l) {
    if (l.size() != L.size()) throw PreconditionError("reversed_chain: dimension mismatch");
    if (!l.positive()) throw PreconditionError("reversed_chain: zero coordinate in l");
    if (!is_stationary(l, L)) throw PreconditionError("reversed_chain: l is not stationary");
    int n = L.size();
    std::vector<Rational> e(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) e[x * n + y] = l[y] * L.at(y, x) / l[x];
    return StochasticMatrix(n, std::move(e));
}

MarkovMeasure reversed_measure(const MarkovMeasure& mu) {
    return MarkovMeasure(mu.alphabet(), reversed_chain(mu.matrix(), mu.initial()), mu.initial());
}

MarkovMeasure bernoulli(const Alphabet& alphabet, const ProbVector& l) {
    int n = l.size();
    std::vector<Rational> e(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) e[x * n + y] = l[y];
    return MarkovMeasure(alphabet, StochasticMatrix(n, std::move(e)), l);
}

bool is_bernoulli(const MarkovMeasure& mu) {
    for (int x = 0; x < mu.matrix().size(); ++x)
        for (int y = 0; y < mu.matrix().size(); ++y)
            if (mu.matrix().at(x, y) != mu.initial()[y]) return false;
    return true;
}

namespace {

struct ChainLine {
    int number;
    std::vector<std::string> tokens;
};

Rational parse_entry(const std::string& tok, int line) {
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

MarkovMeasure parse_chain(const std::string& text) {
    std::vector<ChainLine> lines;
    {
        std::stringstream ss(text);
        std::string raw;
        int number = 0;
        while (std::getline(ss, raw)) {
            ++number;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::stringstream ls(raw);
            ChainLine line{number, {}};
            std::string tok;
            while (ls >> tok) line.tokens.push_back(tok);
            if (!line.tokens.empty()) lines.push_back(std::move(line));
        }
    }

    size_t i = 0;
    if (i >= lines.size()) throw ParseError(0, "empty chain file");
    if (lines[i].tokens[0] != "alphabet")
        throw ParseError(lines[i].number, "expected 'alphabet' line");
    Alphabet alphabet;
    try {
        alphabet = Alphabet({lines[i].tokens.begin() + 1, lines[i].tokens.end()});
    } catch (const PreconditionError& e) {
        throw ParseError(lines[i].number, e.what());
    }
    ++i;

    int n = alphabet.size();
    std::vector<Rational> entries(n * n);
    std::vector<bool> have_row(n, false);
    std::vector<Rational> init;
    int init_line = 0;
    int last_line = lines.back().number;

    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] == "row") {
            if (static_cast<int>(line.tokens.size()) != n + 2)
                throw ParseError(line.number, "malformed line: expected 'row <sym> " +
                                                  std::to_string(n) + " entries'");
            auto x = alphabet.find(line.tokens[1]);
            if (!x) throw ParseError(line.number, "unknown symbol '" + line.tokens[1] + "'");
            if (have_row[*x])
                throw ParseError(line.number, "duplicate row for symbol '" + line.tokens[1] + "'");
            have_row[*x] = true;
            Rational sum = 0;
            for (int j = 0; j < n; ++j) {
                Rational e = parse_entry(line.tokens[j + 2], line.number);
                if (e < 0) throw ParseError(line.number, "negative entry");
                entries[*x * n + j] = e;
                sum += e;
            }
            if (sum != 1)
                throw ParseError(line.number, "row sums to " + to_string(sum) + ", expected 1");
        } else if (line.tokens[0] == "init") {
            if (!init.empty()) throw ParseError(line.number, "duplicate init line");
            if (static_cast<int>(line.tokens.size()) != n + 1)
                throw ParseError(line.number, "malformed line: init needs " + std::to_string(n) +
                                                  " entries");
            for (int j = 0; j < n; ++j)
                init.push_back(parse_entry(line.tokens[j + 1], line.number));
            init_line = line.number;
        } else {
            throw ParseError(line.number, "unknown token '" + line.tokens[0] + "'");
        }
    }

    for (int x = 0; x < n; ++x)
        if (!have_row[x])
            throw ParseError(last_line, "missing row for symbol '" + alphabet.name(x) + "'");

    StochasticMatrix L(n, std::move(entries));

    if (init.empty()) {
        // No init line: the file only makes sense if L pins down a unique
        // stationary vector, so ambiguity is a content error.
        try {
            return MarkovMeasure(alphabet, L, stationary_vector(L));
        } catch (const PreconditionError& e) {
            throw ParseError(last_line, std::string(e.what()) + " (add an explicit init line)");
        }
    }

    ProbVector l;
    try {
        l = ProbVector(std::move(init));
    } catch (const PreconditionError& e) {
        throw ParseError(init_line, e.what());
    }
    if (!is_stationary(l, L)) throw ParseError(init_line, "init vector is not stationary for L");
    return MarkovMeasure(alphabet, std::move(L), std::move(l));
}

std::string serialize_chain(const MarkovMeasure& mu) {
    std::string out = "alphabet";
    for (const auto& s : mu.alphabet().names()) out += " " + s;
    out += "\n";
    for (int x = 0; x < mu.alphabet().size(); ++x) {
        out += "row " + mu.alphabet().name(x);
        for (int y = 0; y < mu.alphabet().size(); ++y)
            out += " " + to_string(mu.matrix().at(x, y));
        out += "\n";
    }
    out += "init " + to_string(mu.initial().entries()) + "\n";
    return out;
}

MarkovMeasure load_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open chain file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_chain(buf.str());
}

}  // namespace mealy
