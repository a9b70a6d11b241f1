#pragma once

#include <json.hpp>

#include "arith/algebra.hpp"
#include "arith/bijections.hpp"
#include "arith/structure.hpp"

namespace arith {

// Integers within +/- 2^53 are emitted as JSON numbers, everything larger
// as decimal strings, so round trips are bit-exact through lossy consumers.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const std::vector<Int>& values);
std::vector<Int> vector_from_json(const nlohmann::json& j);

// {"graph":{"kind":...,"n":...,"adj":only for general},"d":[...],"r":[...]}
nlohmann::json structure_to_json(const ArithmeticalStructure& s);
ArithmeticalStructure structure_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const SubdivisionPlan& plan);
SubdivisionPlan plan_from_json(const nlohmann::json& j);

nlohmann::json word_to_json(const BallotWord& word);
BallotWord word_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const Multiset& s, long n);
std::pair<Multiset, long> multiset_from_json(const nlohmann::json& j);

nlohmann::json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const AbelianGroup& group);

}  // namespace arith
