#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace equidiv {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "-p/q" or an integer string. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or an integer when q = 1.
std::string to_string(const Rational& q);

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(std::int64_t num, std::int64_t den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool is_prime(std::int64_t n);

/// Prime factors in ascending order, with multiplicity.
std::vector<int> prime_factors(int n);

}  // namespace equidiv
