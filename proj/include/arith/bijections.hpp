#pragma once

#include <array>
#include <vector>

#include "arith/multiset.hpp"
#include "arith/path_enum.hpp"
#include "arith/structure.hpp"
#include "arith/transforms.hpp"

namespace arith {

/// Runs a subdivision plan; n must equal plan.target().
ArithmeticalStructure apply_plan(const SubdivisionPlan& plan, long n);

/// Rewrites an in-range edge sequence into the unique weakly increasing one
/// producing the same structure, by repeatedly replacing a descent
/// (e_i, e_{i+1}) with (e_{i+1}, e_i + 1).
SubdivisionPlan normalize_plan(long base, std::vector<long> edges);

/// The unique weakly increasing plan reproducing s; base = r(1)(s).
SubdivisionPlan plan_from_structure(const ArithmeticalStructure& s);

/// Weakly increasing word with 0 <= w_j <= j (positions 1-based). Words of
/// length k encode Arith(P_{k+2}); the leading zeros record the base length.
class BallotWord {
 public:
  BallotWord() = default;
  explicit BallotWord(std::vector<long> entries);

  const std::vector<long>& entries() const { return entries_; }
  long length() const { return static_cast<long>(entries_.size()); }

  bool operator==(const BallotWord& other) const { return entries_ == other.entries_; }
  auto operator<=>(const BallotWord& other) const { return entries_ <=> other.entries_; }

 private:
  std::vector<long> entries_;
};

/// Word of length n-2: r(1)-2 leading zeros followed by the plan edges.
BallotWord word_encode(const ArithmeticalStructure& s);
ArithmeticalStructure word_decode(const BallotWord& word, long n);

/// The word image of rotating the corresponding polygon triangulation:
/// add 1 to coordinate j modulo j+1, then left-pack the zeros, keeping the
/// nonzero entries in order. A bijection of order length+3.
BallotWord rotate_word(const BallotWord& word);

/// Same map via the recursive definition (append b_n + 1, or prepend 0
/// when b_n = n); kept separate so the two routes can be checked against
/// each other.
BallotWord rotate_word_inductive(const BallotWord& word);

/// Triangulation of a convex polygon with vertices 0..N-1 in clockwise
/// order, stored as its N-2 vertex triples. Validated: triples in range,
/// chords pairwise non-crossing, every boundary edge covered.
class Triangulation {
 public:
  Triangulation(long polygon_size, std::vector<std::array<long, 3>> triangles);

  long polygon_size() const { return n_; }
  const std::vector<std::array<long, 3>>& triangles() const { return triangles_; }

  bool operator==(const Triangulation& other) const {
    return n_ == other.n_ && triangles_ == other.triangles_;
  }

 private:
  long n_;
  std::vector<std::array<long, 3>> triangles_;
};

/// Triangle-incidence counts (D_0, ..., D_{N-1}).
std::vector<long> quiddity(const Triangulation& t);

/// (D_1, ..., D_{N-1}) as a d-structure on the (N-1)-vertex path.
ArithmeticalStructure structure_from_triangulation(const Triangulation& t);

/// Inverse of structure_from_triangulation: s on P_n maps to a
/// triangulation of the (n+1)-gon.
Triangulation triangulation_from_structure(const ArithmeticalStructure& s);

/// Clockwise rotation: every label moves to +1 mod N; the quiddity shifts
/// cyclically.
Triangulation rotate_triangulation(const Triangulation& t);

/// The orbit representative driving the insertion algorithm: reverse-lex
/// first among the value-rotations that fit, i.e. whose sorted elements
/// satisfy s_i <= n - size - 1 + i (the insertion chain then ends on at
/// most n vertices). Plain reverse-lex-first representatives may not fit:
/// for n = 5 the orbit of [1,1,1,4] has reverse-lex minimum [1,3,3,3],
/// which would need six vertices.
OrbitRep<Multiset> omega_canonical_rep(const Multiset& s, long n);

/// Builds the cycle structure encoded by a multisubset of [n] of size < n:
/// the empty multiset maps to the Laplacian structure, and in general the
/// canonical representative drives a chain of subdivisions starting from a
/// single vertex. Satisfies r(1) = n - |S| and equivariance with respect
/// to the rotation actions.
ArithmeticalStructure structure_from_multiset(const Multiset& s, long n);

/// Exact inverse: repeatedly deletes the greatest local maximum of the
/// canonical rotation and records its position.
Multiset multiset_from_structure(const ArithmeticalStructure& s);

}  // namespace arith
