#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arith {

// Every domain value is an exact arbitrary-precision integer. r-entries grow
// Fibonacci-like under repeated subdivision and counts leave 64-bit range
// quickly, so nothing in the library uses machine arithmetic for them.
using Int = mpz_class;

Int int_from_decimal(const std::string& text);
std::string to_decimal(const Int& value);

bool fits_long(const Int& value);
long to_long(const Int& value);

// F(1) = F(2) = 1, F(3) = 2, ...
Int fibonacci(long k);

}  // namespace arith
