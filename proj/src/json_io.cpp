#include "arith/json_io.hpp"

#include <stdexcept>

namespace arith {

using nlohmann::json;

namespace {

const Int kSafeBound = (Int(1) << 53);

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument("malformed JSON input: " + what);
}

}  // namespace

json int_to_json(const Int& value) {
  if (value <= kSafeBound && value >= -kSafeBound) {
    return json(static_cast<std::int64_t>(value.get_si()));
  }
  return json(to_decimal(value));
}

Int int_from_json(const json& j) {
  if (j.is_string()) return int_from_decimal(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  bad_input("expected an integer or a decimal string, got " + j.dump());
}

json vector_to_json(const std::vector<Int>& values) {
  json arr = json::array();
  for (const Int& v : values) arr.push_back(int_to_json(v));
  return arr;
}

std::vector<Int> vector_from_json(const json& j) {
  if (!j.is_array()) bad_input("expected an array of integers");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(int_from_json(item));
  return out;
}

json structure_to_json(const ArithmeticalStructure& s) {
  json graph;
  graph["kind"] = to_string(s.graph().kind());
  graph["n"] = s.graph().size();
  if (s.graph().kind() == GraphKind::general) {
    graph["adj"] = s.graph().adjacency();
  }
  json out;
  out["graph"] = std::move(graph);
  out["d"] = vector_to_json(s.d());
  out["r"] = vector_to_json(s.r());
  return out;
}

ArithmeticalStructure structure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("d") || !j.contains("r")) {
    bad_input("a structure needs \"graph\", \"d\" and \"r\"");
  }
  const json& gj = j.at("graph");
  if (!gj.is_object() || !gj.contains("kind") || !gj.contains("n")) {
    bad_input("\"graph\" needs \"kind\" and \"n\"");
  }
  GraphKind kind = graph_kind_from_string(gj.at("kind").get<std::string>());
  long n = gj.at("n").get<long>();

  GraphPtr graph;
  switch (kind) {
    case GraphKind::path: graph = shared_path(n); break;
    case GraphKind::cycle: graph = shared_cycle(n); break;
    case GraphKind::star: graph = shared_star(n - 1); break;
    case GraphKind::general: {
      if (!gj.contains("adj")) bad_input("general graphs need \"adj\"");
      auto adj = gj.at("adj").get<std::vector<std::vector<long>>>();
      graph = std::make_shared<const Graph>(Graph::general(std::move(adj)));
      break;
    }
  }
  if (gj.contains("adj") && kind != GraphKind::general) {
    if (gj.at("adj").get<std::vector<std::vector<long>>>() != graph->adjacency()) {
      bad_input("\"adj\" does not match the canonical " + to_string(kind) + " graph");
    }
  }
  return ArithmeticalStructure(std::move(graph), vector_from_json(j.at("d")),
                               vector_from_json(j.at("r")));
}

json plan_to_json(const SubdivisionPlan& plan) {
  return json{{"base", plan.base}, {"edges", plan.edges}, {"n", plan.target()}};
}

SubdivisionPlan plan_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("edges")) {
    bad_input("a plan needs \"base\" and \"edges\"");
  }
  SubdivisionPlan plan{j.at("base").get<long>(), j.at("edges").get<std::vector<long>>()};
  check_plan(plan);
  return plan;
}

json word_to_json(const BallotWord& word) {
  return json{{"word", word.entries()}};
}

BallotWord word_from_json(const json& j) {
  if (j.is_array()) return BallotWord(j.get<std::vector<long>>());
  if (!j.is_object() || !j.contains("word")) bad_input("expected {\"word\": [...]}");
  return BallotWord(j.at("word").get<std::vector<long>>());
}

json multiset_to_json(const Multiset& s, long n) {
  return json{{"n", n}, {"multiset", s.elements()}};
}

std::pair<Multiset, long> multiset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("multiset")) {
    bad_input("expected {\"n\": ..., \"multiset\": [...]}");
  }
  return {Multiset(j.at("multiset").get<std::vector<long>>()), j.at("n").get<long>()};
}

json triangulation_to_json(const Triangulation& t) {
  json tris = json::array();
  for (const auto& tri : t.triangles()) tris.push_back({tri[0], tri[1], tri[2]});
  return json{{"N", t.polygon_size()}, {"triangles", std::move(tris)}};
}

Triangulation triangulation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("triangles")) {
    bad_input("expected {\"N\": ..., \"triangles\": [[...], ...]}");
  }
  std::vector<std::array<long, 3>> tris;
  for (const auto& item : j.at("triangles")) {
    auto v = item.get<std::vector<long>>();
    if (v.size() != 3) bad_input("triangles must have three vertices");
    tris.push_back({v[0], v[1], v[2]});
  }
  return Triangulation(j.at("N").get<long>(), std::move(tris));
}

json group_to_json(const AbelianGroup& group) {
  json factors = json::array();
  for (const Int& f : group.torsion) factors.push_back(int_to_json(f));
  return json{{"free_rank", group.free_rank},
              {"torsion", std::move(factors)},
              {"group", group.torsion_string()}};
}

}  // namespace arith
