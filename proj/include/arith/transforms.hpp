#pragma once

#include "arith/multiset.hpp"
#include "arith/structure.hpp"

namespace arith {

/// Inserts a degree-2 vertex at position i (1-based, 2 <= i <= n): the new
/// vertex gets d = 1 and r = r_{i-1} + r_i, both neighbors get d + 1.
/// Preserves r(1) and the critical group.
ArithmeticalStructure subdivide_path(const ArithmeticalStructure& s, long i);

/// Inverse of subdivide_path at an interior position with d_i = 1.
ArithmeticalStructure smooth_path(const ArithmeticalStructure& s, long i);

/// Cycle analogues, indices modulo n with d_0 = d_n and r_0 = r_n.
/// subdivide_cycle accepts 1 <= i <= n; smooth_cycle needs
/// d_{i-1} > d_i = 1 < d_{i+1}.
ArithmeticalStructure subdivide_cycle(const ArithmeticalStructure& s, long i);
ArithmeticalStructure smooth_cycle(const ArithmeticalStructure& s, long i);

/// Rotation of positions on a cycle: the result starts at position c+1.
ArithmeticalStructure rotate_structure(const ArithmeticalStructure& s, long c);
std::vector<Int> rotate_vector(const std::vector<Int>& r, long c);

/// Rotation of values: adds c to every element modulo n, representatives
/// in [1, n].
Multiset rotate_multiset(const Multiset& s, long c, long n);

/// Canonical element of an orbit plus the shift that produced it;
/// applying the recorded shift to the input gives the canonical form.
template <typename T>
struct OrbitRep {
  T canonical;
  long shift = 0;
};

/// Comparison at the largest index of disagreement (equal lengths).
bool reverse_lex_less(const std::vector<Int>& a, const std::vector<Int>& b);

/// Reverse-lex-first rotation of r; smallest shift wins ties.
OrbitRep<std::vector<Int>> canonical_orbit_rep(const std::vector<Int>& r);

/// Reverse-lex-first value-rotation of a multiset over [n].
OrbitRep<Multiset> canonical_orbit_rep(const Multiset& s, long n);

}  // namespace arith
