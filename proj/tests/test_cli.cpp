// Copyright 2026 The entdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entdesign/cli.hpp"

using namespace entdesign::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("moment command examples") {
  auto r = invoke({"moment", "--state", "2", "2", "--alpha", "2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "4/5"));
  CHECK(contains(r.out, "0.321928"));
  r = invoke({"moment", "--choi", "2", "2", "2", "2", "--alpha", "2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "2/5"));
  r = invoke({"moment", "--state", "2", "2", "--alpha", "1"});
  CHECK(contains(r.out, "1/1"));
  r = invoke({"moment", "--state", "2", "3", "--alpha", "2:4"});
  CHECK(grid_from_csv(r.out).size() == 4);
}

TEST_CASE("bounds command examples") {
  auto r = invoke({"bounds", "--theorem", "T1", "--state", "16", "16", "--alpha", "2"});
  REQUIRE(r.code == kExitOk);
  auto grid = grid_from_csv(r.out);
  CHECK(grid[1][0] == "T1");
  CHECK(grid[1][8] == "3");

  r = invoke({"bounds", "--theorem", "T3", "--state", "1024", "8", "--a", "1"});
  grid = grid_from_csv(r.out);
  CHECK(grid[1][8] == "7");
  CHECK(grid[1][9] == "true");
  r = invoke({"bounds", "--theorem", "T3", "--state", "1024", "7", "--a", "1"});
  CHECK(grid_from_csv(r.out)[1][9] == "false");

  r = invoke({"bounds", "--theorem", "T5", "--choi", "2", "2", "2", "2", "--alpha", "3"});
  grid = grid_from_csv(r.out);
  CHECK(grid[1][9] == "false");
  CHECK(contains(grid[1][13], "sqrt(6)"));

  r = invoke({"bounds", "--theorem", "all", "--choi", "4", "4", "4", "4", "--d", "16", "--a", "1", "--alpha", "2"});
  CHECK(r.code == kExitOk);
  CHECK(grid_from_csv(r.out).size() == 8);
}

TEST_CASE("verify command") {
  auto r = invoke({"verify", "--seed", "7", "--samples", "20000"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "cycle_lemma_alpha8,1430/1"));
  CHECK(contains(r.out, "weingarten_inverse_d4_alpha3"));
  CHECK_FALSE(contains(r.out, ",false,"));
  r = invoke({"verify"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "--seed"));
}

TEST_CASE("gap-design command") {
  auto r = invoke({"gap-design", "--state", "2", "2"});
  REQUIRE(r.code == kExitOk);
  auto grid = grid_from_csv(r.out);
  CHECK(grid[1][2].substr(0, 7) == "0.88729");
  CHECK(grid[1][3].substr(0, 7) == "0.11270");
  CHECK(grid[1][5] == "4/5");
  const double gap2 = std::stod(grid_from_csv(invoke({"gap-design", "--state", "2", "2", "--alpha", "3"}).out)[1][9]);
  const double gap32 =
      std::stod(grid_from_csv(invoke({"gap-design", "--state", "32", "32", "--alpha", "3"}).out)[1][9]);
  CHECK(gap2 > 0.0);
  CHECK(gap32 > gap2);

  r = invoke({"gap-design", "--state", "3", "2"});
  CHECK(r.code == kExitUsage);
  grid = grid_from_csv(r.out);
  CHECK(contains(grid[1].back(), "d_A <= d_B"));
  CHECK(contains(r.err, "\"error\""));
}

TEST_CASE("usage errors exit with code 2 and one JSON line") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{}, {"moment"}, {"moment", "--state", "2"}, {"moment", "--state", "2", "2", "--alpha", "x"},
        {"moment", "--state", "2", "2", "--choi", "2", "2", "2", "2"}, {"moment", "--state", "2", "2", "--samples", "500"},
        {"moment", "--state", "0", "2"}, {"moment", "--choi", "2", "2", "2", "2", "--alpha", "5"},
        {"bounds", "--theorem", "T9", "--state", "2", "2"}, {"bounds", "--theorem", "T1"}, {"nonsense"},
        {"moment", "--state", "2", "2", "--format", "xml"}}) {
    const auto r = invoke(args);
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
  }
}

TEST_CASE("help goes to stdout") {
  const auto r = invoke({"moment", "--help"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "--state"));
}

TEST_CASE("output is byte-identical and CSV matches JSON") {
  const std::vector<std::vector<std::string>> commands = {
      {"moment", "--state", "2", "3", "--alpha", "1:4", "--samples", "300", "--seed", "11"},
      {"moment", "--choi", "2", "2", "2", "2", "--alpha", "2:3"},
      {"bounds", "--theorem", "all", "--choi", "8", "8", "8", "8", "--d", "64", "--a", "0.5", "--alpha", "2:3"},
      {"verify", "--seed", "3", "--samples", "500"},
      {"gap-design", "--state", "3", "5", "--alpha", "2:5"},
  };
  for (auto args : commands) {
    const auto csv1 = invoke(args);
    const auto csv2 = invoke(args);
    CHECK(csv1.out == csv2.out);
    args.insert(args.end(), {"--format", "json"});
    const auto json1 = invoke(args);
    const auto json2 = invoke(args);
    CHECK(json1.out == json2.out);
    const auto doc = nlohmann::ordered_json::parse(json1.out);
    CHECK(doc.at("schema_version") == kOutputSchemaVersion);
    CHECK(doc.at("command") == args.front());
    CHECK(grid_from_json(doc) == grid_from_csv(csv1.out));
  }
}

TEST_CASE("RunConfig round-trips through JSON") {
  const std::vector<std::vector<std::string>> commands = {
      {"moment", "--state", "2", "3", "--alpha", "1:4", "--samples", "300", "--seed", "18446744073709551615"},
      {"bounds", "--theorem", "T1,T3", "--theorem", "T6", "--state", "8", "8", "--d", "64", "--a", "0.3",
       "--field-constant", "1"},
      {"gap-design", "--state", "3", "5", "--format", "json", "--out", "x.json"},
      {"verify", "--seed", "0"},
  };
  for (const auto& args : commands) {
    const auto config = parse_args(args);
    const auto text = to_json(config).dump();
    CHECK(config_from_json(nlohmann::json::parse(text)) == config);
  }
  const auto bounds = parse_args(commands[1]);
  CHECK(bounds.theorems == std::vector<std::string>{"T1", "T3", "T6"});
  CHECK(*bounds.a == 0.3);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
  const auto path = std::filesystem::temp_directory_path() / "entdesign_cli_test.csv";
  const auto r = invoke({"moment", "--state", "2", "2", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(contains(buffer.str(), "4/5"));
  std::filesystem::remove(path);
  const auto bad = invoke({"moment", "--state", "2", "2", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("CSV quoting") {
  Table t;
  t.columns = {"a", "b"};
  t.add_row({std::string("x,y"), std::string("say \"hi\"")});
  t.add_row({std::monostate{}, 1.5});
  std::ostringstream out;
  write_csv(out, t);
  CHECK(out.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n,1.5\n");
  CHECK(grid_from_csv(out.str())[1] == std::vector<std::string>{"x,y", "say \"hi\""});
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::logic_error);
}
