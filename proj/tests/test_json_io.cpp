#include <doctest.h>

#include "arith/cycle_enum.hpp"
#include "arith/json_io.hpp"
#include "arith/path_enum.hpp"

using namespace arith;
using nlohmann::json;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
  return std::vector<Int>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("integer json uses numbers up to 2^53 and strings beyond") {
  Int small = (Int(1) << 53);
  Int big = small + 1;
  CHECK(int_to_json(Int(0)).is_number());
  CHECK(int_to_json(small).is_number());
  CHECK(int_to_json(big).is_string());
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_from_json(json(-7)) == -7);
  CHECK(int_from_json(json("123456789012345678901234567890")) ==
        int_from_decimal("123456789012345678901234567890"));
  CHECK_THROWS_AS(int_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("structure json round trips bit-exactly") {
  auto check_roundtrip = [](const ArithmeticalStructure& s) {
    json j = structure_to_json(s);
    ArithmeticalStructure back = structure_from_json(j);
    CHECK(back == s);
    CHECK(structure_to_json(back).dump() == j.dump());
  };
  check_roundtrip(structure_from_r(shared_path(5), ints({1, 2, 5, 3, 1})));
  check_roundtrip(structure_from_r(shared_cycle(6), ints({3, 2, 3, 1, 2, 1})));
  check_roundtrip(laplacian_structure(shared_star(3)));
  check_roundtrip(validate(Graph::general({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                           ints({2, 2, 2}), ints({1, 1, 1})));
}

TEST_CASE("sylvester star structure exercises big integers") {
  // 1/2 + 1/3 + 1/7 + 1/43 + ... with a_{k+1} = a_k^2 - a_k + 1 sums to
  // 1 - 1/(a_k (a_k - 1)); closing with a_k (a_k - 1) gives exactly 1.
  std::vector<Int> leaves;
  Int a = 2;
  for (int i = 0; i < 7; ++i) {
    leaves.push_back(a);
    a = a * a - a + 1;
  }
  leaves.push_back(leaves.back() * (leaves.back() - 1));
  mpq_class sum = 0;
  for (const Int& leaf : leaves) sum += mpq_class(1, leaf);
  REQUIRE(sum == 1);

  Int r0 = 1;
  for (const Int& leaf : leaves) mpz_lcm(r0.get_mpz_t(), r0.get_mpz_t(), leaf.get_mpz_t());
  CHECK(r0 > (Int(1) << 53));

  std::vector<Int> d{1}, r{r0};
  for (const Int& leaf : leaves) {
    d.push_back(leaf);
    r.push_back(r0 / leaf);
  }
  ArithmeticalStructure s = validate(shared_star(8), d, r);
  json j = structure_to_json(s);
  bool has_string_entry = false;
  for (const auto& item : j.at("r")) has_string_entry = has_string_entry || item.is_string();
  CHECK(has_string_entry);
  CHECK(structure_from_json(j) == s);
  CHECK(structure_to_json(structure_from_json(j)).dump() == j.dump());
}

TEST_CASE("structure json rejects malformed input") {
  CHECK_THROWS_AS(structure_from_json(json{{"d", {1, 1}}}), std::invalid_argument);
  json wrong_adj{{"graph", {{"kind", "path"}, {"n", 2}, {"adj", {{0, 2}, {2, 0}}}}},
                 {"d", {1, 1}},
                 {"r", {1, 1}}};
  CHECK_THROWS_AS(structure_from_json(wrong_adj), std::invalid_argument);
  json bad_identity{{"graph", {{"kind", "path"}, {"n", 2}}}, {"d", {2, 1}}, {"r", {1, 1}}};
  CHECK_THROWS_AS(structure_from_json(bad_identity), validation_error);
}

TEST_CASE("plan, word, multiset, triangulation, group json") {
  SubdivisionPlan plan{2, {1, 2, 2}};
  CHECK(plan_from_json(plan_to_json(plan)) == plan);
  CHECK_THROWS_AS(plan_from_json(json{{"base", 2}, {"edges", {9}}}),
                  std::invalid_argument);

  BallotWord word(std::vector<long>{1, 2, 2});
  CHECK(word_from_json(word_to_json(word)) == word);

  Multiset ms(std::vector<long>{1, 1, 3, 5});
  auto [back, n] = multiset_from_json(multiset_to_json(ms, 6));
  CHECK(back == ms);
  CHECK(n == 6);

  Triangulation t(5, {{0, 1, 4}, {1, 3, 4}, {1, 2, 3}});
  CHECK(triangulation_from_json(triangulation_to_json(t)) == t);

  json g = group_to_json(AbelianGroup{1, {Int(6)}});
  CHECK(g.at("free_rank") == 1);
  CHECK(g.at("torsion") == json::array({6}));
  CHECK(g.at("group") == "Z_6");
}
