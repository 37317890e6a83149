#include "mealymeasure/rational.hpp"

#include <stdexcept>

namespace mealy {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
    // Validate by hand: mpq_set_str is lenient (ignores whitespace) and we
    // want strict "a/b" | "a" tokens only.
    size_t start = 0;
    if (!token.empty() && token[0] == '-') start = 1;
    size_t slash = token.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(token, start, token.size());
    } else {
        ok = all_digits(token, start, slash) && slash + 1 < token.size() &&
             all_digits(token, slash + 1, token.size());
    }
    if (!ok) throw std::invalid_argument("not a rational: '" + token + "'");

    Rational r;
    if (r.set_str(token, 10) != 0) throw std::invalid_argument("not a rational: '" + token + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + token + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const std::vector<Rational>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

}  // namespace mealy
