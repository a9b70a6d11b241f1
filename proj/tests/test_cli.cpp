#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string cli_binary() {
  const char* env = std::getenv("ARITH_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "ARITH_CLI_BIN must point at the CLI binary");
  return env;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CliResult run_cli(const std::string& args, const std::string& input = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("arith-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path in_file = dir / ("in" + std::to_string(counter));
  fs::path out_file = dir / ("out" + std::to_string(counter));
  fs::path err_file = dir / ("err" + std::to_string(counter));
  ++counter;
  std::ofstream(in_file) << input;
  std::string command = cli_binary() + " " + args + " <" + in_file.string() + " >" +
                        out_file.string() + " 2>" + err_file.string();
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("count emits csv tables with the documented header") {
  CliResult r = run_cli("count cycles 5 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n,key,count");
  long total = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto second_comma = lines[i].rfind(',');
    total += std::stol(lines[i].substr(second_comma + 1));
  }
  CHECK(total == 126);

  CliResult census = run_cli("count cycle-d-census 3 --format csv");
  auto census_lines = lines_of(census.out);
  REQUIRE(census_lines.size() == 5);
  CHECK(census_lines[1] == "3,1,3");
  CliResult shifted = run_cli("count cycle-d-census 3 --position 2 --format csv");
  CHECK(shifted.out == census.out);
}

TEST_CASE("enumerate streams one json object per line") {
  CliResult r = run_cli("enumerate paths 2");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  json row = json::parse(lines[0]);
  CHECK(row.at("d") == json::array({1, 1}));
  CHECK(row.at("r") == json::array({1, 1}));

  CliResult filtered = run_cli("enumerate paths 4 --r1 2");
  CHECK(lines_of(filtered.out).size() == 2);

  CliResult csv = run_cli("enumerate cycles 3 --format csv");
  auto csv_lines = lines_of(csv.out);
  REQUIRE(csv_lines.size() == 11);
  CHECK(csv_lines[0] == "index,d,r,r1,dsum,multiset");
  CHECK(csv_lines[1] == "0,2;2;2,1;1;1,3,6,");
}

TEST_CASE("transform applies subdivision and smoothing") {
  std::string p2 = R"({"graph":{"kind":"path","n":2},"d":[1,1],"r":[1,1]})";
  CliResult grown = run_cli("transform --subdivide 2", p2);
  CHECK(grown.exit_code == 0);
  json g = json::parse(grown.out);
  CHECK(g.at("r") == json::array({1, 2, 1}));

  CliResult back = run_cli("transform --smooth 2", grown.out);
  CHECK(json::parse(back.out).at("r") == json::array({1, 1}));

  CliResult rotated = run_cli(
      "transform --rotate 1",
      R"({"graph":{"kind":"cycle","n":5},"d":[1,5,1,4,2],"r":[3,1,2,1,2]})");
  CHECK(json::parse(rotated.out).at("r") == json::array({1, 2, 1, 2, 3}));
}

TEST_CASE("bijection word and multiset modes invert each other") {
  std::string s = R"({"graph":{"kind":"path","n":5},"d":[2,3,1,2,3],"r":[1,2,5,3,1]})";
  CliResult word = run_cli("bijection --mode word", s);
  CHECK(json::parse(word.out).at("word") == json::array({1, 2, 2}));

  CliResult decoded = run_cli("bijection --mode word --inverse", word.out);
  CHECK(json::parse(decoded.out).at("r") == json::array({1, 2, 5, 3, 1}));

  CliResult omega = run_cli("bijection --mode multiset --inverse",
                            R"({"n":6,"multiset":[1,1,4,4]})");
  CHECK(json::parse(omega.out).at("r") == json::array({3, 2, 1, 3, 2, 1}));

  CliResult rotated = run_cli("bijection --mode frieze-rotate", R"({"word":[1,2,3]})");
  CHECK(json::parse(rotated.out).at("word") == json::array({0, 0, 0}));
  CliResult unrotated = run_cli("bijection --mode frieze-rotate --inverse", rotated.out);
  CHECK(json::parse(unrotated.out).at("word") == json::array({1, 2, 3}));
}

TEST_CASE("critical-group prints invariant factors and a group string") {
  CliResult r = run_cli("critical-group",
                        R"({"graph":{"kind":"cycle","n":3},"d":[2,2,2],"r":[1,1,1]})");
  CHECK(r.exit_code == 0);
  json g = json::parse(r.out);
  CHECK(g.at("torsion") == json::array({3}));
  CHECK(g.at("group") == "Z_3");
  CHECK(g.at("free_rank") == 1);
}

TEST_CASE("oracle subcommand mirrors the enumerators") {
  CliResult paths = run_cli("oracle paths 4");
  CHECK(lines_of(paths.out).size() == 5);
  CliResult star = run_cli("oracle star 2");
  CHECK(lines_of(star.out).size() == 2);
  CliResult general = run_cli("oracle general --bound 2",
                              R"({"kind":"path","n":3})");
  CHECK(lines_of(general.out).size() == 2);
}

TEST_CASE("exit codes distinguish usage and validation failures") {
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("count nonsense 5").exit_code == 2);

  CliResult bad_json = run_cli("critical-group", "not json");
  CHECK(bad_json.exit_code == 1);
  CHECK(bad_json.err.find("malformed JSON") != std::string::npos);

  CliResult invalid = run_cli(
      "critical-group", R"({"graph":{"kind":"path","n":3},"d":[1,2,1],"r":[2,2,2]})");
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.err.find("primitive") != std::string::npos);

  CliResult row_diag = run_cli(
      "transform --subdivide 2",
      R"({"graph":{"kind":"path","n":3},"d":[1,2,1],"r":[1,2,1]})");
  CHECK(row_diag.exit_code == 1);
  CHECK(row_diag.err.find("row 1") != std::string::npos);
}

TEST_CASE("verify runs filtered checks and reports corruption") {
  CliResult literal = run_cli("verify --only literal");
  CHECK(literal.exit_code == 0);
  auto lines = lines_of(literal.out);
  CHECK(lines.size() == 5);  // four literal checks plus the summary
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    CHECK(lines[i].substr(0, 5) == "PASS ");
  }

  CliResult corrupted = run_cli("verify --inject-corruption --only injected");
  CHECK(corrupted.exit_code == 1);
  CHECK(corrupted.out.find("FAIL injected-corruption") != std::string::npos);
  CHECK(corrupted.out.find("row 1") != std::string::npos);

  CliResult as_json = run_cli("verify --only literal --format json");
  json report = json::parse(as_json.out);
  CHECK(report.at("passed") == true);
  CHECK(report.at("checks").size() == 4);

  // equal limits, equal output
  CliResult again = run_cli("verify --only literal --format json");
  CHECK(again.out == as_json.out);
}

TEST_CASE("csv rows round-trip against the json stream") {
  CliResult csv = run_cli("enumerate paths 5 --format csv");
  CliResult js = run_cli("enumerate paths 5");
  auto csv_lines = lines_of(csv.out);
  auto json_lines = lines_of(js.out);
  REQUIRE(csv_lines.size() == json_lines.size() + 1);
  auto split = [](const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
  };
  for (size_t i = 0; i < json_lines.size(); ++i) {
    auto fields = split(csv_lines[i + 1], ',');
    REQUIRE(fields.size() == 5);
    json row = json::parse(json_lines[i]);
    CHECK(std::stol(fields[0]) == row.at("index").get<long>());
    json d = json::array(), r = json::array();
    for (const auto& v : split(fields[1], ';')) d.push_back(std::stol(v));
    for (const auto& v : split(fields[2], ';')) r.push_back(std::stol(v));
    CHECK(d == row.at("d"));
    CHECK(r == row.at("r"));
    CHECK(std::stol(fields[3]) == row.at("r1").get<long>());
    CHECK(std::stol(fields[4]) == row.at("dsum").get<long>());
  }
}

TEST_CASE("enumeration cache is written once and replayed") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("arith-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::string args = "enumerate paths 5 --cache " + dir.string();

  CliResult first = run_cli(args);
  CHECK(first.exit_code == 0);
  fs::path cache_file = dir / "paths-5.jsonl";
  REQUIRE(fs::exists(cache_file));
  auto cached_lines = lines_of(slurp(cache_file));
  REQUIRE(cached_lines.size() == 15);  // header + 14 structures
  json header = json::parse(cached_lines[0]);
  CHECK(header.at("schema_version") == 1);
  CHECK(header.at("family") == "paths");
  CHECK(header.at("count") == 14);

  CliResult second = run_cli(args);
  CHECK(second.out == first.out);

  CliResult filtered = run_cli(args + " --r1 2");
  CHECK(lines_of(filtered.out).size() == 5);
  fs::remove_all(dir);
}
