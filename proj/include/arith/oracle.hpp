#pragma once

#include <optional>
#include <set>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/graph.hpp"

namespace arith {

/// Brute-force enumeration of Arith(P_n) as r-vectors: DFS over the
/// divisibility recurrence r_{i+1} = k r_i - r_{i-1}, entries pruned above
/// the n-th Fibonacci number. Complete: every structure arises from the
/// all-ones vector by subdivisions, each inserted entry is a sum of two
/// adjacent entries, and that keeps entries at or below F(n). The default
/// bound can be overridden (larger is slower, smaller loses completeness).
std::set<std::vector<Int>> brute_force_path(long n,
                                            std::optional<Int> bound = std::nullopt);

/// Brute-force Arith(C_n): every cycle structure has a unit entry, so
/// cutting there gives a path structure on n+1 vertices with entries at
/// most F(n+1); wrap those back and collect all rotations.
std::set<std::vector<Int>> brute_force_cycle(long n,
                                             std::optional<Int> bound = std::nullopt);

/// Direct definition check over the box [1, r_max]^n. NOT guaranteed
/// complete for general graphs; exists to probe beyond paths and cycles.
/// Throws when r_max^n exceeds the node budget.
std::set<std::vector<Int>> brute_force_general(const Graph& g, long r_max,
                                               unsigned long budget = 100000000);

/// One solution of d_0 = sum 1/d_i on the star with n leaves, as the
/// ordered tuple (center; leaves).
struct StarStructure {
  Int center;
  std::vector<Int> leaves;

  bool operator==(const StarStructure& other) const {
    return center == other.center && leaves == other.leaves;
  }
  bool operator<(const StarStructure& other) const {
    if (center != other.center) return center < other.center;
    return leaves < other.leaves;
  }
};

/// All solutions, found by DFS over weakly increasing leaf values with the
/// bound d_i <= (terms remaining)/(target remaining), then expanded to
/// ordered tuples. Every returned tuple is validated as a structure on the
/// star. The cap bounds DFS nodes.
std::vector<StarStructure> star_structures(long n, unsigned long cap = 1000000);

}  // namespace arith
