#include "arith/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace arith {

IntMatrix::IntMatrix(long rows, long cols, Int fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (long j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  long n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      long swap_row = -1;
      for (long i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Row/column operations that keep the invariant A = U * M * V by mirroring
// every row operation on U and every column operation on V.
struct SnfState {
  IntMatrix a;
  std::optional<IntMatrix> u, v;

  void swap_rows(long i, long k) {
    if (i == k) return;
    for (long j = 0; j < a.cols(); ++j) std::swap(a.at(i, j), a.at(k, j));
    if (u) {
      for (long j = 0; j < u->cols(); ++j) std::swap(u->at(i, j), u->at(k, j));
    }
  }
  void swap_cols(long j, long k) {
    if (j == k) return;
    for (long i = 0; i < a.rows(); ++i) std::swap(a.at(i, j), a.at(i, k));
    if (v) {
      for (long i = 0; i < v->rows(); ++i) std::swap(v->at(i, j), v->at(i, k));
    }
  }
  void add_row_multiple(long dst, long src, const Int& factor) {
    for (long j = 0; j < a.cols(); ++j) a.at(dst, j) += factor * a.at(src, j);
    if (u) {
      for (long j = 0; j < u->cols(); ++j) u->at(dst, j) += factor * u->at(src, j);
    }
  }
  void add_col_multiple(long dst, long src, const Int& factor) {
    for (long i = 0; i < a.rows(); ++i) a.at(i, dst) += factor * a.at(i, src);
    if (v) {
      for (long i = 0; i < v->rows(); ++i) v->at(i, dst) += factor * v->at(i, src);
    }
  }
  void negate_row(long i) {
    for (long j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
    if (u) {
      for (long j = 0; j < u->cols(); ++j) u->at(i, j) = -u->at(i, j);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m, bool want_transforms) {
  long rows = m.rows(), cols = m.cols();
  SnfState st{std::move(m), std::nullopt, std::nullopt};
  if (want_transforms) {
    st.u = IntMatrix::identity(rows);
    st.v = IntMatrix::identity(cols);
  }
  long steps = std::min(rows, cols);

  for (long t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing submatrix,
    // row-major tie-break.
    long pi = -1, pj = -1;
    for (long i = t; i < rows; ++i) {
      for (long j = t; j < cols; ++j) {
        if (st.a.at(i, j) == 0) continue;
        if (pi < 0 ||
            mpz_cmpabs(st.a.at(i, j).get_mpz_t(), st.a.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    while (true) {
      bool restart = false;
      for (long i = t + 1; i < rows && !restart; ++i) {
        if (st.a.at(i, t) == 0) continue;
        Int q = st.a.at(i, t) / st.a.at(t, t);  // truncated
        if (q != 0) st.add_row_multiple(i, t, Int(-q));
        if (st.a.at(i, t) != 0) {
          // The remainder is strictly smaller than the pivot; promote it.
          st.swap_rows(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      for (long j = t + 1; j < cols && !restart; ++j) {
        if (st.a.at(t, j) == 0) continue;
        Int q = st.a.at(t, j) / st.a.at(t, t);
        if (q != 0) st.add_col_multiple(j, t, Int(-q));
        if (st.a.at(t, j) != 0) {
          st.swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;

      // Pivot must divide the whole trailing submatrix so the diagonal
      // comes out in divisibility order.
      long bi = -1;
      for (long i = t + 1; i < rows && bi < 0; ++i) {
        for (long j = t + 1; j < cols; ++j) {
          if (st.a.at(i, j) % st.a.at(t, t) != 0) {
            bi = i;
            break;
          }
        }
      }
      if (bi < 0) break;
      st.add_row_multiple(t, bi, Int(1));
    }
    if (st.a.at(t, t) < 0) st.negate_row(t);
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (long t = 0; t < steps; ++t) out.diagonal[t] = st.a.at(t, t);
  out.left = std::move(st.u);
  out.right = std::move(st.v);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  for (long i = 0; i < free_rank; ++i) s += s.empty() ? "Z" : " ⊕ Z";
  for (const Int& f : torsion) {
    s += (s.empty() ? "Z_" : " ⊕ Z_") + f.get_str();
  }
  return s.empty() ? "trivial" : s;
}

std::string AbelianGroup::torsion_string() const {
  std::string s;
  for (const Int& f : torsion) {
    s += (s.empty() ? "Z_" : " ⊕ Z_") + f.get_str();
  }
  return s.empty() ? "trivial" : s;
}

IntMatrix generalized_laplacian(const Graph& g, const std::vector<Int>& d) {
  long n = g.size();
  if (static_cast<long>(d.size()) != n) {
    throw std::invalid_argument("d must have one entry per vertex");
  }
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) {
    m.at(i, i) = d[i];
    for (long j = 0; j < n; ++j) {
      if (i != j) m.at(i, j) = -g.adjacency()[i][j];
    }
  }
  return m;
}

AbelianGroup critical_group(const Graph& g, const std::vector<Int>& d) {
  SmithForm snf = smith_normal_form(generalized_laplacian(g, d));
  long zeros = 0;
  for (const Int& x : snf.diagonal) {
    if (x == 0) ++zeros;
  }
  if (zeros != 1) {
    throw validation_error("d is not an arithmetical d-structure: L(G, d) has rank " +
                           std::to_string(g.size() - zeros) + ", expected " +
                           std::to_string(g.size() - 1));
  }
  AbelianGroup group;
  group.free_rank = 1;
  for (const Int& x : snf.diagonal) {
    if (x > 1) group.torsion.push_back(x);
  }
  return group;
}

}  // namespace arith
