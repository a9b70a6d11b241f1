#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "arith/combinatorics.hpp"
#include "arith/multiset.hpp"
#include "arith/structure.hpp"

namespace arith {

/// Streams Arith(C_n) as the image of the multiset encoding, in
/// deterministic order: multiset size ascending, then sorted-multiset
/// lexicographic. Yields exactly binom(2n-1, n-1) structures, each paired
/// with its preimage.
class CycleEnumerator {
 public:
  explicit CycleEnumerator(long n);

  std::optional<std::pair<Multiset, ArithmeticalStructure>> next();

 private:
  bool advance();

  long n_;
  long size_ = 0;
  bool done_ = false;
  bool primed_ = false;
  std::vector<long> elems_;
};

std::vector<ArithmeticalStructure> enumerate_cycles(long n);
void for_each_cycle(
    long n,
    const std::function<void(const Multiset&, const ArithmeticalStructure&)>& fn);

/// Census of r(1) over Arith(C_n); key 0 never appears.
CountTable census_by_r1_cycle(long n);

/// Opens the cycle at a position with r_j = 1, duplicating that entry at
/// both ends of the resulting path on n+1 vertices.
ArithmeticalStructure cut_cycle_at_one(const ArithmeticalStructure& s, long j);

/// Cuts between two unit positions alpha < beta into two path structures.
std::pair<ArithmeticalStructure, ArithmeticalStructure> cut_cycle_between(
    const ArithmeticalStructure& s, long alpha, long beta);

/// Number of structures on C_n with d_1 = 1 (position-independent).
Int census_d_equals_one(long n);  // n >= 3

}  // namespace arith
