#pragma once

#include <stdexcept>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/graph.hpp"

namespace arith {

/// Raised when a (graph, d, r) triple violates the defining identity, the
/// primitivity of r, or positivity. row() is the 1-based index of the first
/// offending vertex, or 0 when the failure is not tied to a row (e.g. gcd).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what, long row = 0)
      : std::runtime_error(what), row_(row) {}
  long row() const { return row_; }

 private:
  long row_;
};

/// A graph together with positive integer vectors d and r satisfying
/// (diag(d) - A) r = 0 with r primitive. Immutable; the constructor
/// validates, so every live instance satisfies the identity.
class ArithmeticalStructure {
 public:
  ArithmeticalStructure(GraphPtr graph, std::vector<Int> d, std::vector<Int> r);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<Int>& d() const { return d_; }
  const std::vector<Int>& r() const { return r_; }
  long size() const { return static_cast<long>(d_.size()); }

  const Int& d_at(long i) const;  // 1-based
  const Int& r_at(long i) const;  // 1-based

  bool operator==(const ArithmeticalStructure& other) const {
    return graph() == other.graph() && d_ == other.d_ && r_ == other.r_;
  }

 private:
  GraphPtr graph_;
  std::vector<Int> d_;
  std::vector<Int> r_;
};

/// Checks the triple and returns the structure, or throws validation_error
/// naming the first violated row (lowest index) or the gcd violation.
ArithmeticalStructure validate(GraphPtr g, std::vector<Int> d, std::vector<Int> r);
ArithmeticalStructure validate(const Graph& g, std::vector<Int> d, std::vector<Int> r);

/// Recovers d from r via d_i = (sum_j adj[i][j] r_j) / r_i; throws
/// validation_error at the first i where the division is not exact.
std::vector<Int> d_from_r(const Graph& g, const std::vector<Int>& r);

/// Recovers r from d on a path via the forward recurrence. Throws if d is
/// not an arithmetical d-structure on the path.
std::vector<Int> r_from_d(const Graph& g, const std::vector<Int>& d);

long r_ones(const std::vector<Int>& r);
long r_ones(const ArithmeticalStructure& s);
long d_ones(const ArithmeticalStructure& s);

/// d = vertex degrees, r = all ones.
ArithmeticalStructure laplacian_structure(GraphPtr g);

ArithmeticalStructure structure_from_r(GraphPtr g, std::vector<Int> r);

}  // namespace arith
