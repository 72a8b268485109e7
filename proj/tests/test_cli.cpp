#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gridtrail/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json data() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gridtrail");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gridtrail::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GRIDTRAIL_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gridtrail_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("bounds") {
  const Run r = run({"bounds", "--grid", "3,3,3"});
  REQUIRE(r.code == 0);
  const json row = r.data()["rows"][0];
  CHECK(row["lower_general"] == 13);
  CHECK(row["exact"]["value"] == 13);
  CHECK(row["upper_3d"] == 14);

  const json s = run({"bounds", "--n", "3", "--k", "8", "--c", "1"}).data()["rows"][0]["sandwich"];
  CHECK(s["kranakis_below"] == true);
  CHECK(s["bereg_above"] == true);

  const json small = run({"bounds", "--grid", "2,2"}).data()["rows"][0];
  CHECK(small["lower_trivial"].is_null());
  CHECK(small["lower_general"].is_null());
  CHECK(small["not_applicable"].contains("lower_general"));
  CHECK(small["not_applicable"].contains("lower_trivial"));

  const Run csv = run({"bounds", "--grid", "2,2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("dims,", 0) == 0);
  CHECK(csv.out.find("n/a") != std::string::npos);

  const Run sweep = run({"bounds", "--n", "3..5", "--k", "3..4"});
  CHECK(sweep.data()["rows"].size() == 6);

  CHECK(run({"bounds", "--grid", "3,x"}).code == 2);
  CHECK(run({"bounds"}).code == 2);
  CHECK(run({"bounds", "--grid", "3,3", "--n", "3", "--k", "3"}).code == 2);
  CHECK(run({"bounds", "--grid", "3,3", "--c", "1.5"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("bounds echoes the permutation for unsorted dims") {
  const json row = run({"bounds", "--grid", "5,3,4"}).data()["rows"][0];
  CHECK(row["dims"] == json::array({3, 4, 5}));
  CHECK(row["input_dims"] == json::array({5, 3, 4}));
  CHECK(row["lower_general"] == 17);
}

TEST_CASE("verify") {
  const Run pub = run({"verify", data("apex_cycle_published.json"), "--grid", "2,2,2"});
  CHECK(pub.code == 1);
  CHECK(pub.data()["link_count"] == 6);
  CHECK(pub.data()["is_covering"] == false);
  CHECK(pub.data()["uncovered"][0] == json::array({0, 0, 1}));
  CHECK(run({"verify", data("nine_dots.json"), "--format", "csv"}).code == 2);

  const Run rep = run({"verify", data("apex_cycle_repaired.json"), "--grid", "2,2,2"});
  CHECK(rep.code == 0);
  CHECK(rep.data()["link_count"] == 6);

  const Run nine = run({"verify", data("nine_dots.json"), "--grid", "3,3"});
  CHECK(nine.code == 0);
  CHECK(nine.data()["link_count"] == 4);

  const Run cut = run({"verify", data("nine_dots_truncated.json"), "--grid", "3,3"});
  CHECK(cut.code == 1);
  CHECK_FALSE(cut.data()["uncovered"].empty());

  CHECK(run({"verify", data("nine_dots.json"), "--grid", "3,4"}).code == 2);
  CHECK(run({"verify", data("does_not_exist.json")}).code == 2);

  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"dims":[3,3],"cycle":false,"vertices":[[0,0],[0.5,2]]})";
  const Run parse = run({"verify", bad.string()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("/vertices/1/0") != std::string::npos);

  const fs::path repeated = scratch("repeated.json");
  std::ofstream(repeated) << R"({"dims":[2,2],"cycle":false,"vertices":[[0,0],[1,1],[0,0],[1,1]]})";
  const Run structural = run({"verify", repeated.string()});
  CHECK(structural.code == 1);
  CHECK(structural.data()["structural_errors"][0]["code"] == "repeated_link");
}

TEST_CASE("solve") {
  const fs::path out = scratch("solve33.json");
  const fs::path svg = scratch("solve33.svg");
  const Run r = run({"solve", "--grid", "3,3", "--max-links", "4", "--out", out.string(), "--svg", svg.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["links"] == 4);
  CHECK(run({"solve", "--grid", "2,2", "--format", "csv"}).code == 2);
  CHECK(j["status"] == "optimal_restricted");
  CHECK(j["line_cover"]["size"] == 3);
  CHECK(j["verified"] == true);
  CHECK(slurp(svg).find("<svg") != std::string::npos);

  // Round trip: the solve output is a valid trail file.
  CHECK(run({"verify", out.string(), "--grid", "3,3"}).code == 0);

  const Run cube = run({"solve", "--grid", "2,2,2", "--max-links", "7"});
  CHECK(cube.code == 0);
  CHECK(cube.data()["status"] == "optimal_restricted");

  const Run swapped = run({"solve", "--grid", "4,2"});
  CHECK(swapped.code == 0);
  CHECK(swapped.data()["dims"] == json::array({2, 4}));
  CHECK(swapped.data()["input_dims"] == json::array({4, 2}));
  CHECK(swapped.data()["permutation"] == json::array({1, 0}));

  CHECK(run({"solve", "--grid", "3,3", "--max-links", "3"}).code == 1);
  CHECK(run({"solve", "--grid", "4,4", "--node-budget", "3"}).code == 3);
  CHECK(run({"solve"}).code == 2);
}

TEST_CASE("table") {
  const json rows = run({"table", "--n", "2..4", "--k", "2"}).data()["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["h"] == 3);
  CHECK(rows[1]["h"] == 4);
  CHECK(rows[2]["h"] == 6);
  CHECK(rows[0]["ratio"] == "4/3");
  CHECK(rows[1]["ratio"] == "9/8");
  CHECK(rows[2]["ratio"] == "8/9");
  CHECK(rows[0]["chain_next"]["verdict"] == true);
  CHECK(rows[1]["chain_next"]["verdict"] == true);
  CHECK(rows[1]["k2_identity"] == true);

  const json k3 = run({"table", "--n", "2..4", "--k", "3"}).data()["rows"];
  CHECK(k3[0]["h"] == 6);
  CHECK(k3[1]["h"] == 13);
  CHECK(k3[1]["basis"] == "exact");
  CHECK(k3[2]["h"] == 23);
  CHECK(k3[2]["basis"] == "upper_bound");
  CHECK(k3[2]["ratio"] == "64/69");
  CHECK(k3[0]["chain_next"]["verdict"] == true);
  CHECK(k3[1]["chain_next"]["verdict"] == true);

  const json ex = run({"table", "--n", "3..4", "--k", "3", "--basis", "exact"}).data()["rows"];
  CHECK(ex[1]["h"].is_null());
  CHECK(ex[0]["chain_next"]["verdict"].is_null());

  const Run csv = run({"table", "--n", "3", "--k", "2..4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(count(csv.out, "\n") == 4);
  CHECK(csv.out.find("9/8,1.125") != std::string::npos);

  CHECK(run({"table", "--basis", "median"}).code == 2);
  CHECK(run({"table", "--n", "5..3"}).code == 2);
}

TEST_CASE("render") {
  const Run nine = run({"render", data("nine_dots.json")});
  REQUIRE(nine.code == 0);
  CHECK(count(nine.out, "class=\"point covered\"") == 9);
  CHECK(count(nine.out, "<line class=\"link\"") == 4);

  const Run apex = run({"render", data("apex_cycle_published.json")});
  CHECK(apex.code == 0);
  CHECK(count(apex.out, "class=\"point ") == 8);
  CHECK(count(apex.out, "<line class=\"link\"") == 6);

  const Run cut = run({"render", data("nine_dots_truncated.json")});
  CHECK(count(cut.out, "class=\"point uncovered\"") == 2);
  CHECK(cut.out.find("stroke=\"red\"") != std::string::npos);

  const fs::path k4 = scratch("k4.json");
  std::ofstream(k4) << R"({"dims":[2,2,2,2],"cycle":false,"vertices":[[0,0,0,0],[1,1,1,1]]})";
  CHECK(run({"render", k4.string()}).code == 2);
  CHECK(run({"render", data("nine_dots.json"), "--width", "0"}).code == 2);
}

TEST_CASE("output is byte-stable") {
  CHECK(run({"bounds", "--n", "3..4", "--k", "2..4"}).out == run({"bounds", "--n", "3..4", "--k", "2..4"}).out);
  CHECK(run({"render", data("apex_cycle_repaired.json")}).out == run({"render", data("apex_cycle_repaired.json")}).out);
  const Run a = run({"solve", "--grid", "3,4", "--deterministic"});
  const Run b = run({"solve", "--grid", "3,4", "--deterministic"});
  CHECK(a.out == b.out);
  CHECK(a.err.empty());
  CHECK_FALSE(run({"--verbose", "solve", "--grid", "3,3"}).err.empty());
}
