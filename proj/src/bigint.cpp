#include "arith/bigint.hpp"

namespace arith {

Int int_from_decimal(const std::string& text) {
  Int v;
  if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return v;
}

std::string to_decimal(const Int& value) { return value.get_str(); }

bool fits_long(const Int& value) { return value.fits_slong_p() != 0; }

long to_long(const Int& value) {
  if (!value.fits_slong_p()) {
    throw std::overflow_error("integer out of long range: " + value.get_str());
  }
  return value.get_si();
}

Int fibonacci(long k) {
  if (k < 1) throw std::invalid_argument("fibonacci index must be >= 1");
  Int f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

}  // namespace arith
