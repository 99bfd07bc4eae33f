#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ckdual/abelian.hpp"
#include "ckdual/cli.hpp"
#include "ckdual/document.hpp"
#include "ckdual/errors.hpp"

using namespace ckdual;
using nlohmann::json;

namespace {

std::string data(const char* name) { return std::string(CKDUAL_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = invoke(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

// Every string in "groups", wherever it sits, must round-trip.
void check_group_strings(const json& j) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      check_group_strings(value);
    } else if (value.is_string()) {
      const std::string s = value.get<std::string>();
      CHECK(FgAbelianGroup::parse(s).to_string() == s);
    }
  }
}

}  // namespace

TEST_CASE("compare separates the transpose pair") {
  const json r = invoke_json({"compare", data("a.json"), data("at.json")}, 1);
  CHECK(r["result"] == "not isomorphic");
  CHECK(r["verdict"] == false);
  CHECK(r["groups"]["first"]["G2"] == "0");
  CHECK(r["groups"]["second"]["G2"] == "Z/2");
  const Run text = invoke({"compare", data("a.json"), data("a.json")});
  CHECK(text.code == 0);
  CHECK(text.out.find("result: isomorphic") != std::string::npos);
}

TEST_CASE("dual of the all-ones seed") {
  const json r = invoke_json({"dual", data("oinfty.json")}, 0);
  CHECK(r["dual_matrix"] == json::parse("[[1,1,0],[1,1,1],[1,1,1]]"));
  CHECK(r["verdict"] == true);
  for (const auto& [k, v] : r["groups"].items()) CHECK(v == "0");
  for (const char* f : {"kind", "matrix", "K", "c", "tail", "groups", "marked", "verdict", "assumptions"})
    CHECK(r.contains(f));
}

TEST_CASE("validate the p-infinity seed") {
  // At K = 2 the corners A_2, A_3 are reducible, so the verdict is false.
  const json r = invoke_json({"validate", data("pinfty.json")}, 1);
  CHECK(r["properties"]["rs"] == true);
  CHECK(r["properties"]["dc"] == false);
  CHECK(r["properties"]["drs"] == false);
  CHECK(r["properties"]["li_from"] == 4);
  CHECK(r["certification"]["certified"] == false);
  const json k4 = invoke_json({"validate", data("pinfty_k4.json")}, 0);
  CHECK(k4["properties"]["li_all_checked"] == true);
  CHECK(k4["properties"]["drs"] == false);
}

TEST_CASE("validate flags the block-diagonal seed and permutation matrices") {
  const json b = invoke_json({"validate", data("block_diagonal.json")}, 1);
  CHECK(b["properties"]["drs"] == true);
  CHECK(b["properties"]["li_all_checked"] == false);
  const json p = invoke_json({"validate", data("permutation.json")}, 1);
  CHECK(p["properties"]["permutation"] == true);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(invoke({"validate", data("malformed.json")}).code == 2);
  CHECK(invoke({"validate", data("missing.json")}).code == 2);
  CHECK(invoke({"kgroups", data("pinfty.json")}).code == 2);
  CHECK(invoke({"ext", data("explicit.json")}).code == 2);
  CHECK(invoke({"double-dual", data("oinfty.json")}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--format", "yaml", "validate", data("a.json")}).code == 2);
}

TEST_CASE("assumption flag is recorded") {
  const json r = invoke_json({"--assume-drs-li", "ext", data("explicit.json")}, 0);
  REQUIRE(r["assumptions"].size() == 1);
  CHECK(r["assumptions"][0].get<std::string>().find("--assume-drs-li") != std::string::npos);
  const json d = invoke_json({"dual", data("explicit.json"), "--assume-drs-li"}, 0);
  CHECK(d["verdict"] == true);
  CHECK(d["assumptions"].size() == 1);
}

TEST_CASE("per-level queries do not need certification") {
  const json k = invoke_json({"kgroups", data("pinfty.json"), "--level", "4"}, 0);
  CHECK(k["groups"].contains("K0"));
  const json e = invoke_json({"ext", data("pinfty.json"), "--level", "5"}, 0);
  CHECK(e["groups"]["Ext_s"] == "Z^2");
  CHECK(e["groups"]["Ext_s0"] == "Z^2");
  const json s = invoke_json({"sixterm", data("pinfty.json"), "--level", "4"}, 0);
  CHECK(s["verdict"] == true);
}

TEST_CASE("CK documents") {
  const json k = invoke_json({"kgroups", data("a.json")}, 0);
  CHECK(k["groups"]["K0"] == "Z/2");
  CHECK(k["groups"]["K1"] == "0");
  CHECK(k["marked"]["unit"] == json::parse("[1]"));
  const json inv = invoke_json({"ck-invariant", data("at.json")}, 0);
  CHECK(inv["groups"]["G3"] == "Z/2 (+) Z/2");
  const json dd = invoke_json({"double-dual", data("a.json")}, 0);
  CHECK(dd["checks"]["det_identity"] == true);
  CHECK(dd["checks"]["det_original"] == "-2");
  const json ext = invoke_json({"ext", data("a.json")}, 0);
  CHECK(ext["groups"]["Ext_s"] == "Z/2");
  CHECK(ext["groups"]["Ext_w"] == "0");
  const json six = invoke_json({"sixterm", data("a.json")}, 0);
  CHECK(six["verdict"] == true);
}

TEST_CASE("text and json reports agree on group strings") {
  const std::vector<std::vector<std::string>> commands{
      {"kgroups", data("a.json")},        {"ext", data("oinfty.json")},
      {"sixterm", data("pinfty.json")},   {"dual", data("a.json")},
      {"double-dual", data("at.json")},   {"ck-invariant", data("a.json")},
      {"compare", data("a.json"), data("at.json")}};
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const Run text = invoke(cmd);
    std::vector<std::string> jcmd = cmd;
    jcmd.insert(jcmd.begin(), {"--format", "json"});
    const Run js = invoke(jcmd);
    CHECK(text.code == js.code);
    const json j = json::parse(js.out);
    check_group_strings(j["groups"]);
    CHECK(text.out == render_text(j));
    for (const auto& [key, value] : j["groups"].items()) {
      if (value.is_string()) CHECK(text.out.find(key + ": " + value.get<std::string>()) != std::string::npos);
    }
  }
}

TEST_CASE("example corpus passes") {
  const Run r = invoke({"paper-examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const json j = invoke_json({"paper-examples"}, 0);
  std::vector<std::string> names;
  for (const auto& e : j["examples"]) names.push_back(e["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() >= 10);
}

TEST_CASE("document parsing") {
  CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"nope"})")), MalformedDocument);
  CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"ck","matrix":[[1,1],[1]]})")), DimensionMismatch);
  CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"seed","tail":"p-infinity","K":1})")), InvalidSeed);
  CHECK_THROWS_AS(parse_document(json::parse(R"({"kind":"seed","tail":"all-ones","matrix":[[1]],"c":[0]})")),
                  InvalidSeed);
  const InputDocument d = parse_document(json::parse(R"({"kind":"seed","tail":"all-ones","K":3})"));
  CHECK(d.seed->k() == 3);
  const InputDocument h =
      parse_document(json::parse(R"({"kind":"seed","tail":{"type":"hat","base":[[1,1],[1,1]]}})"));
  CHECK(h.seed->k() == 3);
  CHECK(parse_document(seed_to_json(*h.seed)).seed->block() == h.seed->block());
}
