#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fj {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_zero(const RatVector& v);
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);

}  // namespace fj
