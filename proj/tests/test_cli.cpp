#include <doctest.h>

#include "../tools/commands.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int rc = 0;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.rc = rigidlab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "rigidlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kChain = R"({"format":"rigidlab","version":1,"kind":"tree","nodes":[
  {"path":[],"label":0},{"path":[0],"label":1}]})";

} // namespace

TEST_CASE("reports carry their inputs") {
  auto t = put("chain.json", kChain);
  auto r = run({"group", "build", "--params", "4,2,1,1", "--sample-cap", "0", "--tree", t});
  REQUIRE(r.rc == 0);
  auto j = r.json();
  CHECK(j["kind"] == "report");
  CHECK(j["command"] == "group build");
  CHECK(j["input_digest"].get<std::string>().size() == 64);
  CHECK(j["parameters"]["L"] == 4);
  CHECK(j["parameters"]["sample_cap"] == 0);
  CHECK(j["body"]["kind"] == "group");
  CHECK(run({"group", "build", "--params", "4,2,1,1", "--sample-cap", "0", "--tree", t}).out == r.out);

  // a report can be fed back where its body is expected
  auto g = put("group.json", r.out);
  auto a = run({"rigid", "auto", g});
  REQUIRE(a.rc == 0);
  CHECK(a.json()["summary"] == "{+1, -1}");

  // the digest tracks file content, not just the path
  put("chain2.json", R"({"format":"rigidlab","version":1,"kind":"tree","nodes":[{"path":[],"label":1}]})");
  auto other = run({"group", "build", "--params", "4,2,1,1", "--sample-cap", "0", "--tree",
                    (scratch() / "chain2.json").string()});
  REQUIRE(other.rc == 0);
  CHECK(other.json()["input_digest"] != j["input_digest"]);
}

TEST_CASE("exit codes and diagnostics") {
  auto bad = put("bad.json", R"({"format":"rigidlab","version":1,"kind":"tree","nodes":[{"path":[0],"label":0}]})");
  auto t = put("chain.json", kChain);
  auto q = put("q.json", R"({"format":"rigidlab","version":1,"kind":"quasi_order","elements":[0,1],
    "leq":[[0,0],[1,1]]})");
  auto r = run({"tree", "embed", bad, t, q});
  CHECK(r.rc == 2);
  CHECK(r.err.find("nodes") != std::string::npos);

  auto no_refl = put("q2.json", R"({"format":"rigidlab","version":1,"kind":"quasi_order","elements":[0,1],
    "leq":[[0,1]]})");
  CHECK(run({"tree", "embed", t, t, no_refl}).rc == 2);
  CHECK(run({"tree", "embed", t, (scratch() / "missing.json").string(), q}).rc == 2);
  CHECK(run({"formula", "plength", "--orders", "4,x", "--prime", "2"}).rc == 2);
  CHECK(run({"nonsense"}).rc == 2);
  CHECK(run({"group", "build", "--params", "2,3,2,3", "--sample-cap", "0"}).rc == 3);

  auto e = run({"tree", "embed", t, t, q, "--witness"});
  REQUIRE(e.rc == 0);
  CHECK(e.json()["body"]["embeds"] == true);
}

TEST_CASE("partition search summaries") {
  nlohmann::json table = {{"format", "rigidlab"}, {"version", 1}, {"kind", "coloring"},
                          {"ground_size", 4}, {"cap", 3}};
  nlohmann::json entries = nlohmann::json::array();
  for (std::uint64_t s = 0; s < 16; ++s) {
    if (__builtin_popcountll(s) > 3) continue;
    int c = s == 0 ? 0 : 63 - __builtin_clzll(s);
    entries.push_back({{"subset", nlohmann::json::array()}, {"color", c}});
    for (int i = 0; i < 4; ++i)
      if (s >> i & 1) entries.back()["subset"].push_back(i);
  }
  table["colors"] = entries;
  auto path = put("max.json", table.dump());
  auto r = run({"partition", "search", path, "--len", "3"});
  REQUIRE(r.rc == 0);
  CHECK(r.json()["summary"] == "none");
  CHECK(r.json()["body"]["sequence"].is_null());

  auto rnd = run({"partition", "search", "--len", "2", "--random", "5,3,1", "--seed", "3"});
  REQUIRE(rnd.rc == 0);
  CHECK(rnd.json()["summary"] == "sequence: <0,1>");
}

TEST_CASE("games and p-lengths") {
  auto g = run({"game", "ef", "4", "2,2"});
  REQUIRE(g.rc == 0);
  CHECK(g.json()["body"]["equivalent"] == false);
  auto p = run({"formula", "plength", "--orders", "4,8,2", "--prime", "2"});
  REQUIRE(p.rc == 0);
  CHECK(p.json()["body"]["p_length"] == 3);
}
