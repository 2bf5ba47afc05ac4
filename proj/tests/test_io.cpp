#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rcq/error.hpp"
#include "rcq/io.hpp"

using namespace rcq;

TEST_CASE("table json round trip") {
  auto T = oracle::cyclic3();
  auto j = table_to_json(T);
  CHECK(j.dump() == R"({"names":["a","b","c"],"op":[[1,2,0],[1,2,0],[1,2,0]]})");
  CHECK(table_from_json(nlohmann::json::parse(j.dump())) == T);

  auto L = derive_left_operation(T);
  auto jl = table_to_json(L, true);
  CHECK(jl.contains("lop"));
  CHECK(table_from_json(nlohmann::json::parse(jl.dump())) == L);
}

TEST_CASE("malformed tables") {
  using nlohmann::json;
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"op":[[0]]})")), ParseError);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"names":["a"]})")), ParseError);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"names":["a","b"],"op":[[0,1],[0]]})")),
                  StructuralError);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"names":["a","b"],"op":[[0,1],[0,2]]})")),
                  StructuralError);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"names":["a",3],"op":[[0,1],[0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(read_table_file("/nonexistent/table.json"), ParseError);
}

TEST_CASE("solution and birack json") {
  auto rho = to_ybe(oracle::cyclic3());
  CHECK(ybe_from_json(nlohmann::json::parse(ybe_to_json(rho).dump())) == rho);
  auto b = to_birack(oracle::cyclic3());
  CHECK(birack_from_json(nlohmann::json::parse(birack_to_json(b).dump())) == b);
}

TEST_CASE("words") {
  auto T = oracle::cyclic3();
  CHECK(parse_word(T, "a c b") == Word{0, 2, 1});
  CHECK(parse_word(T, "  ").empty());
  CHECK(parse_word(T, "1").empty());
  CHECK(format_word(T, Word{}) == "1");
  CHECK(format_word(T, Word{0, 2, 1}) == "a c b");
  CHECK_THROWS_AS(parse_word(T, "a d"), ParseError);
  CHECK_THROWS_AS(parse_word(T, "a'"), ParseError);

  auto g = parse_group_word(T, "a b' 1 c");
  REQUIRE(g.size() == 3);
  CHECK(g[1].gen == 1);
  CHECK(g[1].inverse);
  CHECK_FALSE(g[2].inverse);
}
