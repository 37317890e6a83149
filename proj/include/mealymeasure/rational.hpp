#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mealy {

// Exact arithmetic everywhere: probabilities are GMP rationals, counts are
// GMP integers. mpq_class keeps values in canonical reduced form.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "a/b" or "a" with optional leading minus, base 10 only.
// Decimals, whitespace and empty tokens are rejected.
Rational parse_rational(const std::string& token);

// "a/b", or "a" when the denominator is 1. Round-trips through parse_rational.
std::string to_string(const Rational& r);

std::string to_string(const std::vector<Rational>& v, const char* sep = " ");

}  // namespace mealy
