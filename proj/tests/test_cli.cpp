#include <algorithm>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"
#include "rcq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = rcq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(char const* name) {
  return std::string(RCQ_TEST_DATA) + "/" + name;
}

std::size_t count_lines(std::string const& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("verify") {
  auto r = run({"verify", data("cyclic3.json")});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["calculus"]["seed"] == 20260101);

  auto m = run({"verify", data("mixed2.json")});
  CHECK(m.code == 1);
  auto jm = nlohmann::json::parse(m.out);
  CHECK(jm["rc"]["witness"] == nlohmann::json::array({0, 1, 0}));

  CHECK(run({"verify", data("ragged.json")}).code == 2);
  CHECK(run({"verify", data("malformed.json")}).code == 2);
  CHECK(run({"verify", data("missing.json")}).code == 2);
  CHECK(run({"verify", data("not_quasigroup.json")}).code == 1);
  CHECK(run({"verify", data("cyclic3.json"), "--seed", "9"}).out.find("\"seed\":9") !=
        std::string::npos);
}

TEST_CASE("convert") {
  auto r = run({"convert", data("ybe_cyclic3.json"), "--to", "table"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["op"] == nlohmann::json::parse("[[1,2,0],[1,2,0],[1,2,0]]"));
  auto y = run({"convert", data("cyclic3.json"), "--to", "ybe"});
  CHECK(nlohmann::json::parse(y.out) == nlohmann::json::parse(run({"convert",
      data("ybe_cyclic3.json"), "--to", "ybe"}).out));
  auto l = run({"convert", data("cyclic3.json"), "--to", "lop"});
  CHECK(nlohmann::json::parse(l.out)["lop"] == nlohmann::json::parse("[[2,2,2],[0,0,0],[1,1,1]]"));
  CHECK(run({"convert", data("mixed2.json"), "--to", "ybe"}).code == 1);
  CHECK(run({"convert", data("cyclic3.json"), "--to", "graph"}).code == 2);
}

TEST_CASE("calc") {
  auto r = run({"calc", data("cyclic3.json"), "omega", "a", "b", "c", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "b\n");
  CHECK(run({"calc", data("cyclic3.json"), "pi", "a a a", "--format", "text"}).out == "a b c\n");
  CHECK(run({"calc", data("cyclic3.json"), "invert", "a a a", "--format", "text"}).out
        == "a c b\n");
  CHECK(run({"calc", data("cyclic3.json"), "omega", "z"}).code == 2);
}

TEST_CASE("monoid") {
  auto eq = run({"monoid", data("cyclic3.json"), "eq", "a c", "b b"});
  CHECK(eq.code == 0);
  CHECK(nlohmann::json::parse(eq.out)["equal"] == true);
  CHECK(run({"monoid", data("cyclic3.json"), "nf", "a a a a", "--format", "text"}).out
        == "a c b | a\n");
  auto p = run({"monoid", data("cyclic3.json"), "presentation", "--format", "text"});
  CHECK(count_lines(p.out) == 3);
  auto lcm = run({"monoid", data("cyclic3.json"), "lcm", "a", "b"});
  CHECK(nlohmann::json::parse(lcm.out)["coords"] == nlohmann::json::parse(R"({"a":1,"b":1})"));
  CHECK(run({"monoid", data("cyclic3.json"), "gcd", "a a", "b b", "--format", "text"}).out
        == "a\n");
  CHECK(run({"monoid", data("cyclic3.json"), "eq", "a"}).code == 2);
  CHECK(run({"monoid", data("mixed2.json"), "presentation"}).code == 1);
}

TEST_CASE("germ and rep") {
  auto g = run({"germ", data("cyclic3.json")});
  CHECK(g.code == 0);
  auto j = nlohmann::json::parse(g.out);
  CHECK(j["d"] == 3);
  CHECK(j["cox_order"] == 27);
  CHECK(j["exponent"] == 9);
  CHECK(j["iyb_order"] == 3);
  auto v = run({"germ", data("swap2.json"), "--verify"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["cox_order"] == 4);
  CHECK(run({"germ", data("cyclic3.json"), "--budget", "10"}).code == 3);

  auto r = run({"rep", data("cyclic3.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a:\n[0 q 0]\n[0 0 1]\n[1 0 0]\n") != std::string::npos);
  CHECK(r.out.find("b:\n[0 1 0]\n[0 0 q]\n[1 0 0]\n") != std::string::npos);
  CHECK(r.out.find("c:\n[0 1 0]\n[0 0 1]\n[q 0 0]\n") != std::string::npos);
  auto s = run({"rep", data("cyclic3.json"), "--specialize", "--element", "a"});
  auto js = nlohmann::json::parse(s.out);
  CHECK(js["order"] == 9);
  CHECK(js["faithful"]["generated"] == 27);
}

TEST_CASE("enum and export") {
  auto e = run({"enum", "2"});
  CHECK(e.code == 0);
  CHECK(count_lines(e.out) == 2);
  CHECK(run({"enum", "3", "--up-to-iso", "--format", "text"}).out == "5\n");
  CHECK(run({"enum", "3", "--naive", "--format", "text"}).out == "12\n");
  CHECK(run({"enum", "5"}).code == 3);

  auto d = run({"export", data("cyclic3.json"), "--kind", "germ-cayley"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph", 0) == 0);
  CHECK(d.out.find("->") != std::string::npos);
  auto div = run({"export", data("cyclic3.json"), "--kind", "divisor-lattice", "--power", "1",
                  "--format", "json"});
  auto jd = nlohmann::json::parse(div.out);
  CHECK(jd["vertices"].size() == 8);
  CHECK(jd["edges"].size() == 12);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
