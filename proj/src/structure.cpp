#include "arith/structure.hpp"

#include <numeric>

namespace arith {

namespace {

void check_sizes(const Graph& g, const std::vector<Int>& d, const std::vector<Int>& r) {
  if (static_cast<long>(d.size()) != g.size() ||
      static_cast<long>(r.size()) != g.size()) {
    throw std::invalid_argument("d and r must have one entry per vertex (n = " +
                                std::to_string(g.size()) + ")");
  }
}

void check_positive(const std::vector<Int>& v, const char* name) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) {
      throw validation_error(std::string(name) + "_" + std::to_string(i + 1) +
                                 " must be positive (got " + v[i].get_str() + ")",
                             static_cast<long>(i + 1));
    }
  }
}

void check_primitive(const std::vector<Int>& r) {
  Int g = 0;
  for (const Int& x : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  throw validation_error("r is not primitive (gcd = " + g.get_str() + ")");
}

Int neighbor_sum(const Graph& g, const std::vector<Int>& r, long i) {
  Int sum = 0;
  for (auto [j, mult] : g.neighbor_lists()[i]) {
    if (mult == 1) {
      sum += r[j];
    } else {
      sum += mult * r[j];
    }
  }
  return sum;
}

}  // namespace

ArithmeticalStructure::ArithmeticalStructure(GraphPtr graph, std::vector<Int> d,
                                             std::vector<Int> r)
    : graph_(std::move(graph)), d_(std::move(d)), r_(std::move(r)) {
  if (!graph_) throw std::invalid_argument("null graph");
  check_sizes(*graph_, d_, r_);
  check_positive(d_, "d");
  check_positive(r_, "r");
  check_primitive(r_);
  for (long i = 0; i < graph_->size(); ++i) {
    Int lhs = d_[i] * r_[i];
    Int rhs = neighbor_sum(*graph_, r_, i);
    if (lhs != rhs) {
      throw validation_error("identity fails at row " + std::to_string(i + 1) +
                                 ": d_" + std::to_string(i + 1) + "*r_" +
                                 std::to_string(i + 1) + " = " + lhs.get_str() +
                                 " but the neighbor sum is " + rhs.get_str(),
                             i + 1);
    }
  }
}

const Int& ArithmeticalStructure::d_at(long i) const {
  if (i < 1 || i > size()) throw std::out_of_range("index out of range");
  return d_[i - 1];
}

const Int& ArithmeticalStructure::r_at(long i) const {
  if (i < 1 || i > size()) throw std::out_of_range("index out of range");
  return r_[i - 1];
}

ArithmeticalStructure validate(GraphPtr g, std::vector<Int> d, std::vector<Int> r) {
  return ArithmeticalStructure(std::move(g), std::move(d), std::move(r));
}

ArithmeticalStructure validate(const Graph& g, std::vector<Int> d, std::vector<Int> r) {
  return ArithmeticalStructure(std::make_shared<const Graph>(g), std::move(d),
                               std::move(r));
}

std::vector<Int> d_from_r(const Graph& g, const std::vector<Int>& r) {
  if (static_cast<long>(r.size()) != g.size()) {
    throw std::invalid_argument("r must have one entry per vertex");
  }
  check_positive(r, "r");
  check_primitive(r);
  std::vector<Int> d(r.size());
  for (long i = 0; i < g.size(); ++i) {
    Int sum = neighbor_sum(g, r, i);
    if (sum % r[i] != 0) {
      throw validation_error("row " + std::to_string(i + 1) + ": r_" +
                                 std::to_string(i + 1) + " = " + r[i].get_str() +
                                 " does not divide the neighbor sum " + sum.get_str(),
                             i + 1);
    }
    d[i] = sum / r[i];
  }
  return d;
}

std::vector<Int> r_from_d(const Graph& g, const std::vector<Int>& d) {
  if (g.kind() != GraphKind::path) {
    throw std::invalid_argument("r_from_d is implemented for paths only");
  }
  long n = g.size();
  if (static_cast<long>(d.size()) != n) {
    throw std::invalid_argument("d must have one entry per vertex");
  }
  check_positive(d, "d");
  // r_1 = 1, r_2 = d_1, r_{i+1} = d_i r_i - r_{i-1}; the final equation
  // r_n d_n = r_{n-1} then certifies d.
  std::vector<Int> r(n);
  r[0] = 1;
  if (n >= 2) r[1] = d[0];
  for (long i = 1; i + 1 < n; ++i) {
    r[i + 1] = d[i] * r[i] - r[i - 1];
    if (r[i + 1] < 1) {
      throw validation_error("d is not an arithmetical d-structure on the path: r_" +
                                 std::to_string(i + 2) + " = " + r[i + 1].get_str(),
                             i + 2);
    }
  }
  if (r[n - 1] * d[n - 1] != r[n - 2]) {
    throw validation_error(
        "d is not an arithmetical d-structure on the path: end condition fails", n);
  }
  return r;
}

long r_ones(const std::vector<Int>& r) {
  long count = 0;
  for (const Int& x : r) {
    if (x == 1) ++count;
  }
  return count;
}

long r_ones(const ArithmeticalStructure& s) { return r_ones(s.r()); }

long d_ones(const ArithmeticalStructure& s) {
  long count = 0;
  for (const Int& x : s.d()) {
    if (x == 1) ++count;
  }
  return count;
}

ArithmeticalStructure laplacian_structure(GraphPtr g) {
  if (!g) throw std::invalid_argument("null graph");
  long n = g->size();
  std::vector<Int> d(n), r(n, 1);
  for (long v = 1; v <= n; ++v) d[v - 1] = g->degree(v);
  return ArithmeticalStructure(std::move(g), std::move(d), std::move(r));
}

ArithmeticalStructure structure_from_r(GraphPtr g, std::vector<Int> r) {
  if (!g) throw std::invalid_argument("null graph");
  std::vector<Int> d = d_from_r(*g, r);
  return ArithmeticalStructure(std::move(g), std::move(d), std::move(r));
}

}  // namespace arith
