#pragma once

#include <map>

#include "arith/bigint.hpp"

namespace arith {

/// A refined census: key -> exact count. Keys are structural parameters
/// (a value of r(1), a d-entry, a d-sum) and always fit a long.
struct CountTable {
  long n = 0;
  std::map<long, Int> rows;

  Int total() const;
  bool operator==(const CountTable& other) const {
    return n == other.n && rows == other.rows;
  }
};

/// binom(n, k); 0 when k < 0 or k > n. n must be nonnegative.
Int binomial(long n, long k);

Int catalan(long n);  // n >= 0

/// Lattice paths from (0,0) to (k, l) that never cross above y = x.
/// Zero when l > k; negative arguments are errors, not zeros.
Int ballot(long k, long l);

/// Number of structures on the n-vertex path with r(1) = k.
Int path_count_refined(long n, long k);  // n >= 2, 1 <= k <= n

/// Number of structures on the n-vertex cycle with r(1) = k.
Int cycle_count_refined(long n, long k);  // n >= 2, 1 <= k <= n

/// Number of path structures with a prescribed d-sum; zero outside
/// [2n-2, 3n-4].
Int dsum_census_closed(long n, long target);  // n >= 2

/// Number of structures on the (n+2)-vertex path with r(1) = 2 and exactly
/// k entries of d equal to 1.
Int aigner_schulze_count(long n, long k);  // n, k >= 1

}  // namespace arith
