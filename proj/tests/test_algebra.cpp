#include <doctest.h>

#include "arith/algebra.hpp"
#include "arith/path_enum.hpp"

using namespace arith;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
  return std::vector<Int>(values.begin(), values.end());
}

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("generalized laplacian") {
  IntMatrix a = generalized_laplacian(*shared_path(2), ints({1, 1}));
  CHECK(a == from_rows({{1, -1}, {-1, 1}}));
  IntMatrix b = generalized_laplacian(*shared_cycle(2), ints({1, 4}));
  CHECK(b == from_rows({{1, -2}, {-2, 4}}));
  IntMatrix c = generalized_laplacian(*shared_cycle(3), ints({2, 2, 2}));
  CHECK(c == from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST_CASE("smith normal form on the worked examples") {
  CHECK(smith_normal_form(from_rows({{1, -1}, {-1, 1}})).diagonal ==
        ints({1, 0}));
  CHECK(smith_normal_form(from_rows({{1, -2}, {-2, 4}})).diagonal ==
        ints({1, 0}));
  CHECK(smith_normal_form(
            generalized_laplacian(*shared_cycle(3), ints({2, 2, 2})))
            .diagonal == ints({1, 3, 0}));
  CHECK(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).diagonal ==
        ints({2, 6, 12}));
  // invariant factors by determinantal divisors: gcd of entries 2,
  // gcd of 2x2 minors 4, |det| = 624
  CHECK(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})).diagonal ==
        ints({2, 2, 156}));
  CHECK(smith_normal_form(IntMatrix(2, 3)).diagonal == ints({0, 0}));
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
  auto matrices = {from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}),
                   from_rows({{3, 1}, {1, 3}}),
                   from_rows({{6, 10, 15}, {10, 15, 6}}),
                   from_rows({{0, 0}, {0, 0}})};
  for (const IntMatrix& m : matrices) {
    SmithForm snf = smith_normal_form(m, true);
    REQUIRE(snf.left.has_value());
    REQUIRE(snf.right.has_value());
    IntMatrix product = multiply(multiply(*snf.left, m), *snf.right);
    for (long i = 0; i < product.rows(); ++i) {
      for (long j = 0; j < product.cols(); ++j) {
        Int expected = i == j && i < static_cast<long>(snf.diagonal.size())
                           ? snf.diagonal[i]
                           : Int(0);
        CHECK(product.at(i, j) == expected);
      }
    }
    Int du = determinant(*snf.left);
    Int dv = determinant(*snf.right);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("critical groups of paths are trivial") {
  for (long n = 2; n <= 7; ++n) {
    for (const auto& s : enumerate_paths(n)) {
      AbelianGroup g = critical_group(s.graph(), s.d());
      CHECK(g.free_rank == 1);
      CHECK(g.trivial_torsion());
    }
  }
}

TEST_CASE("critical groups of cycle laplacians are cyclic of order n") {
  for (long n = 3; n <= 6; ++n) {
    AbelianGroup g = critical_group(*shared_cycle(n), std::vector<Int>(n, 2));
    CHECK(g.torsion == std::vector<Int>{Int(n)});
  }
  AbelianGroup c2 = critical_group(*shared_cycle(2), ints({1, 4}));
  CHECK(c2.trivial_torsion());
}

TEST_CASE("non-arithmetical d is rejected") {
  CHECK_THROWS_AS(critical_group(*shared_path(2), ints({2, 2})), validation_error);
}

TEST_CASE("group strings") {
  CHECK(AbelianGroup{1, {}}.torsion_string() == "trivial");
  CHECK(AbelianGroup{1, {Int(3)}}.torsion_string() == "Z_3");
  CHECK(AbelianGroup{0, {Int(2), Int(4)}}.torsion_string() == "Z_2 ⊕ Z_4");
  CHECK(AbelianGroup{2, {Int(3)}}.to_string() == "Z ⊕ Z ⊕ Z_3");
}
