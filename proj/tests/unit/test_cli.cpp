#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "graphmonoid/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

std::string data(const std::string& name) {
  return std::string(GRAPHMONOID_TEST_DATA) + "/" + name;
}

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = graphmonoid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("equal prints a decision and a certificate") {
  auto r = run({"equal", "--graph", data("emitter.json"), "--lhs", data("emitter_lhs.json"),
                "--rhs", data("emitter_rhs.json")});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["equal"] == true);
  CHECK(j["certificate"]["kind"] == "chain");
  CHECK(j["certificate"]["chain"].size() == 2);

  auto no = run({"equal", "--graph", data("diamond.json"), "--lhs", data("diamond_v.json"),
                 "--rhs", data("diamond_2u.json")});
  CHECK(no.code == 0);
  CHECK(no.doc()["equal"] == true);
}

TEST_CASE("a false decision still exits 0") {
  auto r = run({"equal", "--graph", data("emitter.json"), "--lhs", data("emitter_lhs.json"),
                "--rhs", data("emitter_w.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["equal"] == false);
  CHECK(r.doc()["certificate"]["kind"] == "separating");
}

TEST_CASE("desingularize marks boundary vertices") {
  auto r = run({"desingularize", "--graph", data("emitter.json"), "--level", "3"});
  REQUIRE(r.code == 0);
  int boundary = 0;
  const auto j = r.doc();
  for (const auto& v : j["vertices"]) boundary += v.is_object();
  CHECK(boundary == 2);
}

TEST_CASE("oracle-check reports agreement counts") {
  auto r = run({"oracle-check", "--graph", data("diamond.json"), "--samples", "50", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["agreements"] == 50);
  CHECK(r.doc()["discrepancies"] == 0);
  auto again = run({"oracle-check", "--graph", data("diamond.json"), "--samples", "50", "--seed", "7"});
  CHECK(again.out == r.out);
  auto cyclic = run({"oracle-check", "--graph", data("rose.json")});
  CHECK(cyclic.code == 2);
}

TEST_CASE("phi, psi and truncation errors") {
  auto p = run({"phi", "--graph", data("emitter.json"), "--element", data("emitter_rhs.json")});
  REQUIRE(p.code == 0);
  CHECK(p.doc()["level"] == 3);
  auto small = run({"phi", "--graph", data("emitter.json"), "--element", data("emitter_rhs.json"),
                    "--level", "1"});
  CHECK(small.code == 2);
  CHECK(small.err.find("required level is 3") != std::string::npos);

  auto back = run({"psi", "--graph", data("emitter.json"), "--element", data("emitter_tail.json"),
                   "--level", "3"});
  REQUIRE(back.code == 0);
  CHECK(back.doc()["image"]["terms"][0]["gen"]["S"].size() == 2);
}

TEST_CASE("morphism commands") {
  auto ok = run({"ck-check", "--source", data("edge.json"), "--target", data("edge.json"),
                 "--morphism", data("edge_inclusion.json")});
  REQUIRE(ok.code == 0);
  CHECK(ok.doc()["is_ck"] == true);
  auto not_ck = run({"ck-check", "--source", data("edge.json"), "--target",
                     data("edge_plus_loop.json"), "--morphism", data("edge_inclusion.json")});
  REQUIRE(not_ck.code == 0);
  CHECK(not_ck.doc()["is_ck"] == false);
  auto refused = run({"induced-map", "--source", data("edge.json"), "--target",
                      data("edge_plus_loop.json"), "--morphism", data("edge_inclusion.json")});
  CHECK(refused.code == 2);
  auto induced = run({"induced-map", "--source", data("edge.json"), "--target", data("edge.json"),
                      "--morphism", data("edge_inclusion.json")});
  REQUIRE(induced.code == 0);
  CHECK(induced.doc()["map"].size() == 2);
}

TEST_CASE("chains") {
  auto c = run({"colimit", "--system", data("chain.json")});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["injections"].size() == 3);
  auto k = run({"continuity-check", "--system", data("chain.json"), "--degree", "2"});
  REQUIRE(k.code == 0);
  CHECK(k.doc()["ok"] == true);
}

TEST_CASE("validate, present and normal-form") {
  auto v = run({"validate", "--graph", data("bad_range.json")});
  REQUIRE(v.code == 0);
  CHECK(v.doc()["valid"] == false);
  auto p = run({"present", "--graph", data("rose.json")});
  REQUIRE(p.code == 0);
  CHECK(p.doc()["relations"].size() == 1);
  // Graded order keeps the single generator a_v as the least form of 2a_u.
  auto n = run({"normal-form", "--graph", data("diamond.json"), "--element", data("diamond_2u.json")});
  REQUIRE(n.code == 0);
  CHECK(n.doc()["normal_form"]["terms"].size() == 1);
  CHECK(n.doc()["normal_form"]["terms"][0]["gen"]["v"] == "v");
  auto text = run({"normal-form", "--graph", data("diamond.json"), "--element",
                   data("diamond_2u.json"), "--format", "text"});
  CHECK(text.out.find("normal_form: a_v\n") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate", "--graph", data("sink.json"), "--bogus"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"--format", "xml", "validate", "--graph", data("sink.json")}).code == 2);
  auto broken = run({"present", "--graph", data("broken.json")});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("broken.json") != std::string::npos);
  CHECK(broken.err.find("line") != std::string::npos);
  CHECK(run({"present", "--graph", data("bad_range.json")}).code == 2);
  CHECK(run({"validate", "--graph", data("missing.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget exhaustion exits 3") {
  auto r = run({"--budget", "1", "normal-form", "--graph", data("emitter.json"), "--element",
                data("emitter_lhs.json")});
  CHECK(r.code == 3);
  auto after = run({"normal-form", "--graph", data("emitter.json"), "--element",
                    data("emitter_lhs.json"), "--budget", "1"});
  CHECK(after.code == 3);
  setenv("GRAPHMONOID_BUDGET", "1", 1);
  CHECK(run({"normal-form", "--graph", data("emitter.json"), "--element",
             data("emitter_lhs.json")}).code == 3);
  setenv("GRAPHMONOID_BUDGET", "abc", 1);
  CHECK(run({"validate", "--graph", data("sink.json")}).code == 2);
  unsetenv("GRAPHMONOID_BUDGET");
}
