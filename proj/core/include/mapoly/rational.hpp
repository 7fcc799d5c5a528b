#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mapoly {

/// Exact rational in lowest terms with positive denominator. Every
/// arithmetic result of mpq_class is canonical; values built from raw
/// numerator/denominator pairs go through make_rat().
using Rat = mpq_class;
using Int = mpz_class;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

Rat make_rat(const Int& num, const Int& den);

/// Accepts "p", "-p", "p/q". Throws Error(ParseError) on malformed input or
/// a zero denominator.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

Int floor(const Rat& value);
Int ceil(const Rat& value);
bool is_integer(const Rat& value);

/// Exact int64 conversion; throws std::overflow_error when out of range.
std::int64_t to_int64(const Int& value);

RatVector to_rat(const IntVector& v);
std::string to_string(const RatVector& v);

/// Rank over Q by Gaussian elimination.
int rank(RatMatrix rows);

/// Determinant over Q of a square matrix.
Rat determinant(RatMatrix m);

/// Solves a square system; returns false when the matrix is singular.
bool solve(RatMatrix a, RatVector b, RatVector& x);

}  // namespace mapoly
