#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/graph.hpp"
#include "arith/structure.hpp"

namespace arith {

/// Dense matrix of exact integers, 0-based.
class IntMatrix {
 public:
  IntMatrix(long rows, long cols, Int fill = 0);
  static IntMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Int& at(long i, long j) { return data_[i * cols_ + j]; }
  const Int& at(long i, long j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  long rows_, cols_;
  std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

/// diag(d_1, ..., d_k) with d_i | d_{i+1}, zeros trailing. When transforms
/// are recorded, left * input * right equals the diagonal form and both
/// transforms are unimodular.
struct SmithForm {
  std::vector<Int> diagonal;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

SmithForm smith_normal_form(IntMatrix m, bool want_transforms = false);

/// Finitely generated abelian group: free rank plus invariant factors > 1
/// in divisibility order.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial_torsion() const { return torsion.empty(); }
  std::string to_string() const;          // whole group, "trivial" when 0
  std::string torsion_string() const;     // torsion part: "trivial" or "Z_a ⊕ Z_b"

  bool operator==(const AbelianGroup& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
};

/// L(G, d) = diag(d) - A.
IntMatrix generalized_laplacian(const Graph& g, const std::vector<Int>& d);

/// Torsion part of coker L(G, d), with free rank 1. Throws
/// validation_error when the rank is not n-1 (d is not arithmetical).
AbelianGroup critical_group(const Graph& g, const std::vector<Int>& d);

}  // namespace arith
