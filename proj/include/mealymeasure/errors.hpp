#pragma once

#include <stdexcept>
#include <string>

namespace mealy {

// Input text could not be parsed. `line` is 1-based; 0 means the error is not
// tied to a single line (e.g. truncated file).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A mathematical precondition of an operation does not hold
// (non-invertible automaton passed to invert, non-unique stationary
// vector, frequency query without L-strong connectivity, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mealy
