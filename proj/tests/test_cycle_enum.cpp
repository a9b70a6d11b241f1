#include <doctest.h>

#include <set>

#include "arith/cycle_enum.hpp"

using namespace arith;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
  return std::vector<Int>(values.begin(), values.end());
}

ArithmeticalStructure cycle_r(std::initializer_list<long> r) {
  std::vector<Int> vec(r.begin(), r.end());
  long n = static_cast<long>(vec.size());
  return structure_from_r(shared_cycle(n), std::move(vec));
}

}  // namespace

TEST_CASE("the three structures of the 2-cycle") {
  auto structures = enumerate_cycles(2);
  REQUIRE(structures.size() == 3);
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> got;
  for (const auto& s : structures) got.emplace(s.d(), s.r());
  CHECK(got == std::set<std::pair<std::vector<Int>, std::vector<Int>>>{
                   {ints({2, 2}), ints({1, 1})},
                   {ints({1, 4}), ints({2, 1})},
                   {ints({4, 1}), ints({1, 2})}});
}

TEST_CASE("cycle totals and membership") {
  CHECK(enumerate_cycles(3).size() == 10);
  for (long n = 2; n <= 8; ++n) {
    Int count = 0;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure&) { count += 1; });
    CHECK(count == binomial(2 * n - 1, n - 1));
  }
  std::set<std::vector<Int>> five;
  for_each_cycle(5, [&](const Multiset&, const ArithmeticalStructure& s) {
    five.insert(s.r());
  });
  CHECK(five.count(ints({3, 1, 2, 1, 2})) == 1);
}

TEST_CASE("cycle census by r(1)") {
  CHECK(census_by_r1_cycle(2).rows == std::map<long, Int>{{1, Int(2)}, {2, Int(1)}});
  CHECK(census_by_r1_cycle(3).rows ==
        std::map<long, Int>{{1, Int(6)}, {2, Int(3)}, {3, Int(1)}});
  for (long n = 2; n <= 7; ++n) {
    CountTable census = census_by_r1_cycle(n);
    CHECK(census.rows.count(0) == 0);
    for (const auto& [k, count] : census.rows) {
      CHECK(count == cycle_count_refined(n, k));
    }
    CHECK(census.rows.at(1) == n * catalan(n - 1));
  }
}

TEST_CASE("cutting a cycle open at a unit entry") {
  CHECK(cut_cycle_at_one(cycle_r({2, 1}), 2).r() == ints({1, 2, 1}));
  CHECK(cut_cycle_at_one(cycle_r({1, 1, 1}), 1).r() == ints({1, 1, 1, 1}));
  CHECK(cut_cycle_at_one(cycle_r({3, 1, 2, 1, 2}), 2).r() == ints({1, 2, 1, 2, 3, 1}));
  CHECK_THROWS_AS(cut_cycle_at_one(cycle_r({3, 1, 2, 1, 2}), 1), std::invalid_argument);
}

TEST_CASE("cutting a cycle between two unit entries") {
  auto [a, b] = cut_cycle_between(cycle_r({1, 2, 1}), 1, 3);
  CHECK(a.r() == ints({1, 2, 1}));
  CHECK(b.r() == ints({1, 1}));

  auto [c, d] = cut_cycle_between(cycle_r({1, 1, 1, 1}), 1, 3);
  CHECK(c.r() == ints({1, 1, 1}));
  CHECK(d.r() == ints({1, 1, 1}));

  auto [e, f] = cut_cycle_between(cycle_r({3, 1, 2, 1, 2}), 2, 4);
  CHECK(e.r() == ints({1, 2, 1}));
  CHECK(f.r() == ints({1, 2, 3, 1}));

  CHECK_THROWS_AS(cut_cycle_between(cycle_r({3, 1, 2, 1, 2}), 1, 2),
                  std::invalid_argument);
}

TEST_CASE("unit-d census counts the structures of the smaller cycle") {
  // #{d_1 = 1} = |Arith(C_{n-1})|: subdividing at position 1 is a bijection
  // onto the structures with a unit entry there.
  CHECK(census_d_equals_one(3) == 3);
  CHECK(census_d_equals_one(4) == 10);
  for (long n = 3; n <= 7; ++n) {
    CHECK(census_d_equals_one(n) == binomial(2 * n - 3, n - 2));
  }
  CHECK_THROWS_AS(census_d_equals_one(2), std::invalid_argument);
}

TEST_CASE("wraparound divisibility and the d-sum identity") {
  for (long n = 2; n <= 6; ++n) {
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      Int dsum = 0;
      for (const Int& x : s.d()) dsum += x;
      CHECK(dsum == 3 * n - r_ones(s));
      for (long i = 0; i < n; ++i) {
        Int neighbor_sum = n == 2 ? Int(2 * s.r()[(i + 1) % 2])
                                  : s.r()[(i + n - 1) % n] + s.r()[(i + 1) % n];
        CHECK(neighbor_sum % s.r()[i] == 0);
      }
    });
  }
}

TEST_CASE("enumeration yields each preimage multiset") {
  std::set<Multiset> seen;
  long count = 0;
  for_each_cycle(4, [&](const Multiset& ms, const ArithmeticalStructure& s) {
    seen.insert(ms);
    CHECK(r_ones(s) == 4 - ms.size());
    ++count;
  });
  CHECK(count == 35);
  CHECK(seen.size() == 35);
}
