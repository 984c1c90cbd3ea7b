#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sepsys/errors.hpp"

namespace sepsys {

// All numeric work is exact: arbitrary-precision rationals and integers.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a/b" or "a" (optionally signed). Result is canonicalized.
Rational parse_rational(const std::string& text);

// Renders in lowest terms: "a/b", or just "a" when the denominator is 1.
std::string rat_str(const Rational& q);

std::string int_str(const Integer& z);

// Least common multiple of the denominators; always positive.
Integer common_denominator(const std::vector<Rational>& values);

} // namespace sepsys
