#include "arith/combinatorics.hpp"

#include <stdexcept>

namespace arith {

Int CountTable::total() const {
  Int sum = 0;
  for (const auto& [key, count] : rows) {
    (void)key;
    sum += count;
  }
  return sum;
}

namespace {

Int exact_quotient(const Int& numerator, const Int& divisor) {
  if (divisor == 0 || numerator % divisor != 0) {
    throw std::logic_error("expected exact division: " + numerator.get_str() + " / " +
                           divisor.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

}  // namespace

Int binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

Int catalan(long n) {
  if (n < 0) throw std::domain_error("catalan needs n >= 0");
  return exact_quotient(binomial(2 * n, n), Int(n + 1));
}

Int ballot(long k, long l) {
  if (k < 0 || l < 0) throw std::domain_error("ballot needs k, l >= 0");
  if (l > k) return 0;
  return exact_quotient(Int(k - l + 1) * binomial(k + l, k), Int(k + 1));
}

Int path_count_refined(long n, long k) {
  if (n < 2) throw std::domain_error("path_count_refined needs n >= 2");
  if (k < 1 || k > n) throw std::domain_error("path_count_refined needs 1 <= k <= n");
  return ballot(n - 2, n - k);
}

Int cycle_count_refined(long n, long k) {
  if (n < 2) throw std::domain_error("cycle_count_refined needs n >= 2");
  if (k < 1 || k > n) throw std::domain_error("cycle_count_refined needs 1 <= k <= n");
  return binomial(2 * n - k - 1, n - k);
}

Int dsum_census_closed(long n, long target) {
  if (n < 2) throw std::domain_error("dsum_census_closed needs n >= 2");
  if (target < 2 * n - 2 || target > 3 * n - 4) return 0;
  return ballot(n - 2, target - 2 * n + 2);
}

Int aigner_schulze_count(long n, long k) {
  if (n < 1 || k < 1) throw std::domain_error("aigner_schulze_count needs n, k >= 1");
  Int b = binomial(n - 1, 2 * k - 2);
  if (b == 0) return 0;
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n + 1 - 2 * k));
  return b * pow2 * catalan(k - 1);
}

}  // namespace arith
