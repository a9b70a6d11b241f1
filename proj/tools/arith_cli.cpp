// Command-line front end: exact counting, enumeration, transforms,
// bijections, critical groups, brute-force oracles and the verification
// harness, all over the JSON/CSV schemas described in the README.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arith/algebra.hpp"
#include "arith/bijections.hpp"
#include "arith/combinatorics.hpp"
#include "arith/cycle_enum.hpp"
#include "arith/json_io.hpp"
#include "arith/oracle.hpp"
#include "arith/path_enum.hpp"
#include "arith/transforms.hpp"
#include "arith/verify.hpp"

namespace {

using arith::Int;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr long kCacheSchemaVersion = 1;

json read_stdin_json() {
  std::stringstream buffer;
  buffer << std::cin.rdbuf();
  return json::parse(buffer.str());
}

std::string join(const std::vector<Int>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

std::string join(const std::vector<long>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---- count ----

struct CountArgs {
  std::string table;
  long n = 0;
  long position = 1;
  std::string format = "json";
};

void emit_count_rows(const CountArgs& args, const std::map<long, Int>& rows) {
  if (args.format == "csv") {
    std::cout << "n,key,count\n";
    for (const auto& [key, count] : rows) {
      std::cout << args.n << "," << key << "," << count.get_str() << "\n";
    }
  } else {
    json out = json::array();
    for (const auto& [key, count] : rows) {
      out.push_back({{"n", args.n}, {"key", key}, {"count", arith::int_to_json(count)}});
    }
    std::cout << out.dump() << "\n";
  }
}

int run_count(const CountArgs& args) {
  std::map<long, Int> rows;
  if (args.table == "paths") {
    for (long k = 1; k <= args.n; ++k) {
      Int c = arith::path_count_refined(args.n, k);
      if (c != 0) rows[k] = c;
    }
  } else if (args.table == "cycles") {
    for (long k = 1; k <= args.n; ++k) rows[k] = arith::cycle_count_refined(args.n, k);
  } else if (args.table == "dsum") {
    for (long t = 2 * args.n - 2; t <= std::max(3 * args.n - 4, 2 * args.n - 2); ++t) {
      rows[t] = arith::dsum_census_closed(args.n, t);
    }
  } else if (args.table == "aigner-schulze") {
    for (long k = 1; 2 * k - 2 <= args.n - 1; ++k) {
      rows[k] = arith::aigner_schulze_count(args.n, k);
    }
  } else if (args.table == "catalan") {
    for (long k = 0; k <= args.n; ++k) rows[k] = arith::catalan(k);
  } else if (args.table == "ballot") {
    for (long l = 0; l <= args.n; ++l) rows[l] = arith::ballot(args.n, l);
  } else if (args.table == "path-d-census") {
    rows = arith::census_by_d_entry(args.n, args.position).rows;
  } else if (args.table == "cycle-d-census") {
    // empirical census of d-values at one position; no closed form is
    // claimed for values other than 1
    arith::for_each_cycle(args.n, [&](const arith::Multiset&,
                                      const arith::ArithmeticalStructure& s) {
      rows[arith::to_long(s.d_at(args.position))] += 1;
    });
  }
  emit_count_rows(args, rows);
  return kExitOk;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string family;
  long n = 0;
  long r1 = -1;
  std::string format = "json";
  std::string cache_dir;
};

json path_row(long index, const arith::ArithmeticalStructure& s) {
  json row = arith::structure_to_json(s);
  row["index"] = index;
  row["r1"] = arith::r_ones(s);
  Int dsum = 0;
  for (const Int& x : s.d()) dsum += x;
  row["dsum"] = arith::int_to_json(dsum);
  return row;
}

void emit_row(const EnumerateArgs& args, const json& row) {
  if (args.r1 >= 0 && row.at("r1").get<long>() != args.r1) return;
  if (args.format == "csv") {
    std::vector<Int> d = arith::vector_from_json(row.at("d"));
    std::vector<Int> r = arith::vector_from_json(row.at("r"));
    std::cout << row.at("index").get<long>() << "," << join(d, ';') << "," << join(r, ';')
              << "," << row.at("r1").get<long>() << ","
              << arith::int_from_json(row.at("dsum")).get_str();
    if (row.contains("multiset")) {
      std::string ms = join(row.at("multiset").get<std::vector<long>>(), ',');
      if (ms.find(',') != std::string::npos) ms = "\"" + ms + "\"";
      std::cout << "," << ms;
    }
    std::cout << "\n";
  } else {
    std::cout << row.dump() << "\n";
  }
}

void emit_csv_header(const EnumerateArgs& args) {
  if (args.format != "csv") return;
  std::cout << "index,d,r,r1,dsum";
  if (args.family == "cycles") std::cout << ",multiset";
  std::cout << "\n";
}

Int expected_total(const EnumerateArgs& args) {
  return args.family == "paths" ? arith::catalan(args.n - 1)
                                : arith::binomial(2 * args.n - 1, args.n - 1);
}

void generate_rows(const EnumerateArgs& args, const std::function<void(const json&)>& sink) {
  long index = 0;
  if (args.family == "paths") {
    arith::for_each_path(args.n, [&](const arith::ArithmeticalStructure& s) {
      sink(path_row(index++, s));
    });
  } else {
    arith::for_each_cycle(args.n, [&](const arith::Multiset& ms,
                                      const arith::ArithmeticalStructure& s) {
      json row = path_row(index++, s);
      row["multiset"] = ms.elements();
      sink(row);
    });
  }
}

int run_enumerate(const EnumerateArgs& args) {
  emit_csv_header(args);
  if (args.cache_dir.empty()) {
    generate_rows(args, [&](const json& row) { emit_row(args, row); });
    return kExitOk;
  }

  namespace fs = std::filesystem;
  fs::create_directories(args.cache_dir);
  fs::path file = fs::path(args.cache_dir) /
                  (args.family + "-" + std::to_string(args.n) + ".jsonl");
  Int expected = expected_total(args);

  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string line;
    bool usable = false;
    if (std::getline(in, line)) {
      json header = json::parse(line, nullptr, false);
      usable = !header.is_discarded() && header.is_object() &&
               header.value("schema_version", -1L) == kCacheSchemaVersion &&
               header.value("family", "") == args.family &&
               header.value("n", -1L) == args.n &&
               arith::int_from_json(header.value("count", json(0))) == expected;
    }
    if (usable) {
      // Cache hits are re-validated by count only.
      std::vector<std::string> lines;
      std::string data;
      while (std::getline(in, data)) {
        if (!data.empty()) lines.push_back(data);
      }
      if (Int(static_cast<long>(lines.size())) == expected) {
        for (const auto& l : lines) emit_row(args, json::parse(l));
        return kExitOk;
      }
    }
  }

  std::ofstream out(file, std::ios::trunc);
  json header{{"schema_version", kCacheSchemaVersion},
              {"family", args.family},
              {"n", args.n},
              {"count", arith::int_to_json(expected)}};
  out << header.dump() << "\n";
  generate_rows(args, [&](const json& row) {
    out << row.dump() << "\n";
    emit_row(args, row);
  });
  return kExitOk;
}

// ---- transform / bijection / critical-group ----

struct TransformArgs {
  long subdivide = 0;
  long smooth = 0;
  long rotate = 0;
};

int run_transform(const TransformArgs& args) {
  arith::ArithmeticalStructure s = arith::structure_from_json(read_stdin_json());
  bool is_cycle = s.graph().kind() == arith::GraphKind::cycle;
  arith::ArithmeticalStructure out = [&]() {
    if (args.subdivide > 0) {
      return is_cycle ? arith::subdivide_cycle(s, args.subdivide)
                      : arith::subdivide_path(s, args.subdivide);
    }
    if (args.smooth > 0) {
      return is_cycle ? arith::smooth_cycle(s, args.smooth)
                      : arith::smooth_path(s, args.smooth);
    }
    return arith::rotate_structure(s, args.rotate);
  }();
  std::cout << arith::structure_to_json(out).dump() << "\n";
  return kExitOk;
}

int run_bijection(const std::string& mode, bool inverse) {
  json in = read_stdin_json();
  json out;
  if (mode == "plan") {
    if (inverse) {
      arith::SubdivisionPlan plan = arith::plan_from_json(in);
      out = arith::structure_to_json(arith::apply_plan(plan, plan.target()));
    } else {
      out = arith::plan_to_json(arith::plan_from_structure(arith::structure_from_json(in)));
    }
  } else if (mode == "word") {
    if (inverse) {
      arith::BallotWord word = arith::word_from_json(in);
      long n = in.is_object() && in.contains("n") ? in.at("n").get<long>()
                                                  : word.length() + 2;
      out = arith::structure_to_json(arith::word_decode(word, n));
    } else {
      arith::ArithmeticalStructure s = arith::structure_from_json(in);
      out = arith::word_to_json(arith::word_encode(s));
      out["n"] = s.size();
    }
  } else if (mode == "frieze-rotate") {
    arith::BallotWord word = arith::word_from_json(in);
    if (inverse) {
      // the rotation has order length+3
      for (long k = 0; k < word.length() + 2; ++k) word = arith::rotate_word(word);
    } else {
      word = arith::rotate_word(word);
    }
    out = arith::word_to_json(word);
  } else if (mode == "triangulation") {
    if (inverse) {
      out = arith::structure_to_json(
          arith::structure_from_triangulation(arith::triangulation_from_json(in)));
    } else {
      out = arith::triangulation_to_json(
          arith::triangulation_from_structure(arith::structure_from_json(in)));
    }
  } else {  // multiset
    if (inverse) {
      auto [ms, n] = arith::multiset_from_json(in);
      out = arith::structure_to_json(arith::structure_from_multiset(ms, n));
    } else {
      arith::ArithmeticalStructure s = arith::structure_from_json(in);
      out = arith::multiset_to_json(arith::multiset_from_structure(s), s.size());
    }
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_critical_group() {
  arith::ArithmeticalStructure s = arith::structure_from_json(read_stdin_json());
  arith::AbelianGroup group = arith::critical_group(s.graph(), s.d());
  std::cout << arith::group_to_json(group).dump() << "\n";
  return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
  std::string family;
  long n = 0;
  long bound = 0;
  unsigned long budget = 100000000;
  unsigned long cap = 1000000;
};

int run_oracle(const OracleArgs& args) {
  if (args.family == "paths" || args.family == "cycles") {
    std::optional<Int> bound;
    if (args.bound > 0) bound = Int(args.bound);
    auto vectors = args.family == "paths" ? arith::brute_force_path(args.n, bound)
                                          : arith::brute_force_cycle(args.n, bound);
    for (const auto& r : vectors) {
      std::cout << json{{"r", arith::vector_to_json(r)}}.dump() << "\n";
    }
  } else if (args.family == "general") {
    json in = read_stdin_json();
    json gj = in.is_object() && in.contains("graph") ? in.at("graph") : in;
    arith::GraphKind kind = arith::graph_kind_from_string(gj.at("kind").get<std::string>());
    long n = gj.at("n").get<long>();
    std::shared_ptr<const arith::Graph> g;
    if (kind == arith::GraphKind::general) {
      g = std::make_shared<const arith::Graph>(
          arith::Graph::general(gj.at("adj").get<std::vector<std::vector<long>>>()));
    } else if (kind == arith::GraphKind::star) {
      g = arith::shared_star(n - 1);
    } else {
      g = arith::shared_graph(kind, n);
    }
    long r_max = args.bound > 0 ? args.bound : 8;
    std::cerr << "note: box search up to r_max = " << r_max
              << "; completeness is not guaranteed for general graphs\n";
    for (const auto& r : arith::brute_force_general(*g, r_max, args.budget)) {
      std::cout << json{{"r", arith::vector_to_json(r)}}.dump() << "\n";
    }
  } else {  // star
    for (const auto& sol : arith::star_structures(args.n, args.cap)) {
      std::cout << json{{"center", arith::int_to_json(sol.center)},
                        {"leaves", arith::vector_to_json(sol.leaves)}}
                       .dump()
                << "\n";
    }
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  arith::VerifyOptions options;
  std::string format = "text";
  bool list = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.list) {
    for (const auto& name : arith::verification_check_names(args.options)) {
      std::cout << name << "\n";
    }
    return kExitOk;
  }
  auto results = arith::run_verification(args.options);
  bool all_passed = true;
  if (args.format == "json") {
    // timings are kept out of the report so equal limits give equal output
    json out = json::array();
    for (const auto& r : results) {
      all_passed = all_passed && r.passed;
      out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    std::cout << json{{"checks", std::move(out)}, {"passed", all_passed}}.dump() << "\n";
  } else {
    for (const auto& r : results) {
      all_passed = all_passed && r.passed;
      if (r.passed) {
        std::cout << "PASS " << r.name << "\n";
      } else {
        std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
      }
    }
    std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << " ("
              << results.size() << " checks)\n";
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on path and cycle graph structures"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Closed-form counting tables");
  count->add_option("table", count_args.table, "Which table")
      ->required()
      ->check(CLI::IsMember({"paths", "cycles", "dsum", "aigner-schulze", "catalan",
                             "ballot", "path-d-census", "cycle-d-census"}));
  count->add_option("n", count_args.n, "Size parameter")->required();
  count->add_option("--position", count_args.position,
                    "1-based vertex position for the d-censuses");
  count->add_option("--format", count_args.format)->check(CLI::IsMember({"json", "csv"}));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream all structures");
  enumerate->add_option("family", enum_args.family, "paths or cycles")
      ->required()
      ->check(CLI::IsMember({"paths", "cycles"}));
  enumerate->add_option("n", enum_args.n, "Number of vertices")->required();
  enumerate->add_option("--r1", enum_args.r1, "Keep only structures with this r(1)");
  enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--cache", enum_args.cache_dir,
                        "Directory for JSON-lines result caching");

  TransformArgs transform_args;
  auto* transform = app.add_subcommand(
      "transform", "Subdivide/smooth/rotate a structure (JSON on stdin)");
  auto* opt_sub = transform->add_option("--subdivide", transform_args.subdivide,
                                        "Insert a vertex at this position");
  auto* opt_smooth =
      transform->add_option("--smooth", transform_args.smooth, "Remove this position");
  auto* opt_rot = transform->add_option("--rotate", transform_args.rotate,
                                        "Rotate a cycle structure by this shift");
  opt_sub->excludes(opt_smooth)->excludes(opt_rot);
  opt_smooth->excludes(opt_rot);

  std::string bijection_mode;
  bool bijection_inverse = false;
  auto* bijection = app.add_subcommand("bijection", "Apply one of the explicit bijections");
  bijection->add_option("--mode", bijection_mode)
      ->required()
      ->check(CLI::IsMember({"plan", "word", "frieze-rotate", "triangulation", "multiset"}));
  bijection->add_flag("--inverse", bijection_inverse, "Apply the inverse direction");

  auto* critical =
      app.add_subcommand("critical-group", "Invariant factors of a structure (stdin)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Independent brute-force searches");
  oracle->add_option("family", oracle_args.family)
      ->required()
      ->check(CLI::IsMember({"paths", "cycles", "general", "star"}));
  oracle->add_option("n", oracle_args.n, "Size (unused for general)");
  oracle->add_option("--bound", oracle_args.bound,
                     "Entry bound override (r_max for general)");
  oracle->add_option("--budget", oracle_args.budget, "Node budget for general search");
  oracle->add_option("--cap", oracle_args.cap, "Node cap for the star search");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("--max-path", verify_args.options.max_path, "Largest path size");
  verify->add_option("--max-cycle", verify_args.options.max_cycle, "Largest cycle size");
  verify->add_option("--only", verify_args.options.only, "Substring filter on check names");
  verify->add_option("--threads", verify_args.options.threads,
                     "Worker threads (default: ARITH_THREADS or hardware)");
  verify->add_flag("--inject-corruption", verify_args.options.inject_failure,
                   "Add a deliberately corrupted structure (the check fails)");
  verify->add_flag("--list", verify_args.list, "List check names and exit");
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (transform->parsed()) {
      if (opt_sub->count() + opt_smooth->count() + opt_rot->count() != 1) {
        std::cerr << "transform needs exactly one of --subdivide/--smooth/--rotate\n";
        return kExitUsage;
      }
      return run_transform(transform_args);
    }
    if (bijection->parsed()) return run_bijection(bijection_mode, bijection_inverse);
    if (critical->parsed()) return run_critical_group();
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const json::parse_error& e) {
    std::cerr << "malformed JSON input: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
