#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "arith/combinatorics.hpp"
#include "arith/structure.hpp"

namespace arith {

/// A subdivision history: start from the Laplacian structure on the path
/// with `base` vertices and subdivide edge `edges[i]` of the current path
/// at step i. Step i (1-based) may name edges 1 .. base+i-2; weakly
/// increasing sequences are the canonical representatives, one per
/// structure.
struct SubdivisionPlan {
  long base = 2;
  std::vector<long> edges;

  long target() const { return base + static_cast<long>(edges.size()); }
  bool weakly_increasing() const;

  bool operator==(const SubdivisionPlan& other) const {
    return base == other.base && edges == other.edges;
  }
};

/// Throws unless base >= 2 and 1 <= edges[i-1] <= base+i-2 for every step i.
void check_plan(const SubdivisionPlan& plan);

/// Streams Arith(P_n) in deterministic order: base ascending, then edge
/// sequence lexicographic. Yields exactly catalan(n-1) structures.
class PathEnumerator {
 public:
  explicit PathEnumerator(long n);

  /// Next structure, or nullopt when exhausted.
  std::optional<ArithmeticalStructure> next();

  /// Plan of the most recently returned structure.
  const SubdivisionPlan& current_plan() const { return plan_; }

 private:
  void start_base(long base);
  bool advance();

  long n_;
  long base_ = 0;
  bool done_ = false;
  bool primed_ = false;
  SubdivisionPlan plan_;
  std::vector<ArithmeticalStructure> stack_;
};

std::vector<ArithmeticalStructure> enumerate_paths(long n);
void for_each_path(long n, const std::function<void(const ArithmeticalStructure&)>& fn);

/// Census of r(1) values over Arith(P_n); key 1 never appears.
CountTable census_by_r1(long n);

/// Census of the values of d_i (fixed 1-based position i) over Arith(P_n).
CountTable census_by_d_entry(long n, long i);

/// The complementary quiddity entry 3n-3 - sum(d); equals r(1) - 1.
Int apex_quiddity(const ArithmeticalStructure& s);

/// Splits a path structure at an interior position j with r_j = 1 into
/// structures on the first j and last n-j+1 vertices.
std::pair<ArithmeticalStructure, ArithmeticalStructure> split_at_one(
    const ArithmeticalStructure& s, long j);

}  // namespace arith
