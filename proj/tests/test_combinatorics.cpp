#include <doctest.h>

#include <map>

#include "arith/combinatorics.hpp"

using namespace arith;

namespace {

// Lattice-path oracle: walks from (0,0) to (k,l) by east/north steps that
// never cross above y = x, counted by dynamic programming.
Int ballot_oracle(long k, long l) {
  std::map<std::pair<long, long>, Int> ways;
  ways[{0, 0}] = 1;
  for (long x = 0; x <= k; ++x) {
    for (long y = 0; y <= std::min(x, l); ++y) {
      if (x == 0 && y == 0) continue;
      Int w = 0;
      if (x > 0) w += ways[{x - 1, y}];
      if (y > 0 && y - 1 <= x) w += ways[{x, y - 1}];
      ways[{x, y}] = w;
    }
  }
  return ways[{k, l}];
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  const long known[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (long n = 0; n <= 10; ++n) CHECK(catalan(n) == known[n]);
  CHECK_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-2, 1), std::domain_error);
}

TEST_CASE("ballot numbers") {
  CHECK(ballot(2, 2) == 2);
  for (long k = 0; k <= 6; ++k) CHECK(ballot(k, 0) == 1);
  CHECK(ballot(3, 2) == 5);
  CHECK(ballot(2, 3) == 0);
  CHECK_THROWS_AS(ballot(-1, 0), std::domain_error);
  CHECK_THROWS_AS(ballot(0, -1), std::domain_error);

  // against the independent lattice-path count and the reflection identity
  for (long k = 0; k <= 8; ++k) {
    for (long l = 0; l <= 8; ++l) {
      Int expected = l > k ? Int(0) : ballot_oracle(k, l);
      CHECK(ballot(k, l) == expected);
      if (l <= k) {
        CHECK(ballot(k, l) == binomial(k + l, l) - binomial(k + l, l - 1));
      }
    }
  }
  for (long k = 0; k <= 8; ++k) CHECK(ballot(k, k) == catalan(k));
}

TEST_CASE("refined path counts") {
  CHECK(path_count_refined(4, 2) == 2);
  for (long n = 2; n <= 10; ++n) CHECK(path_count_refined(n, 1) == 0);
  CHECK(path_count_refined(4, 4) == 1);
  CHECK_THROWS_AS(path_count_refined(1, 1), std::domain_error);
  CHECK_THROWS_AS(path_count_refined(4, 5), std::domain_error);

  for (long n = 2; n <= 12; ++n) {
    Int total = 0;
    for (long k = 1; k <= n; ++k) {
      Int via_ballot = path_count_refined(n, k);
      total += via_ballot;
      // second algebraic route: ((k-1)/(n-1)) * binom(2n-2-k, n-2)
      Int numerator = Int(k - 1) * binomial(2 * n - 2 - k, n - 2);
      CHECK(numerator % (n - 1) == 0);
      CHECK(via_ballot == numerator / (n - 1));
    }
    CHECK(total == catalan(n - 1));
  }
}

TEST_CASE("refined cycle counts") {
  CHECK(cycle_count_refined(2, 2) == 1);
  CHECK(cycle_count_refined(2, 1) == 2);
  CHECK(cycle_count_refined(3, 1) == 6);
  for (long n = 2; n <= 10; ++n) CHECK(cycle_count_refined(n, n) == 1);

  for (long n = 2; n <= 12; ++n) {
    Int total = 0;
    for (long k = 1; k <= n; ++k) total += cycle_count_refined(n, k);
    CHECK(total == binomial(2 * n - 1, n - 1));
  }
}

TEST_CASE("d-sum census closed form") {
  CHECK(dsum_census_closed(4, 6) == 1);
  CHECK(dsum_census_closed(4, 7) == 2);
  CHECK(dsum_census_closed(4, 9) == 0);
  CHECK(dsum_census_closed(4, 5) == 0);
  for (long n = 2; n <= 12; ++n) {
    Int total = 0;
    for (long t = 2 * n - 2; t <= 3 * n - 4; ++t) total += dsum_census_closed(n, t);
    if (n == 2) total = dsum_census_closed(2, 2);
    CHECK(total == catalan(n - 1));
    CHECK(dsum_census_closed(n, 2 * n - 3) == 0);
    CHECK(dsum_census_closed(n, 3 * n - 3) == 0);
  }
}

TEST_CASE("unit-d refinement for r(1)=2 structures") {
  CHECK(aigner_schulze_count(1, 1) == 1);
  CHECK(aigner_schulze_count(3, 1) == 4);
  CHECK(aigner_schulze_count(2, 2) == 0);
  CHECK_THROWS_AS(aigner_schulze_count(0, 1), std::domain_error);
  // summing over k recovers all r(1)=2 structures on P_{n+2}
  for (long n = 1; n <= 10; ++n) {
    Int total = 0;
    for (long k = 1; 2 * k - 2 <= n - 1; ++k) total += aigner_schulze_count(n, k);
    CHECK(total == path_count_refined(n + 2, 2));
  }
}

TEST_CASE("convolution identity for refined path counts") {
  for (long n = 3; n <= 12; ++n) {
    for (long k = 2; k < n; ++k) {
      Int sum = 0;
      for (long m = 2; m <= n - k + 1; ++m) {
        sum += path_count_refined(m, 2) * path_count_refined(n - m + 1, k);
      }
      CHECK(sum == path_count_refined(n, k + 1));
    }
  }
}

TEST_CASE("lattice identity linking cycle and path counts") {
  for (long n = 2; n <= 12; ++n) {
    for (long k = 2; k <= n; ++k) {
      Int sum = 0;
      for (long z = 0; z <= n - k; ++z) {
        sum += Int(z + 1) * catalan(z) * path_count_refined(n - z, k);
      }
      CHECK(sum == binomial(2 * n - k - 1, n - k));
    }
  }
}

TEST_CASE("count table totals") {
  CountTable t{4, {{2, Int(2)}, {3, Int(2)}, {4, Int(1)}}};
  CHECK(t.total() == 5);
}
