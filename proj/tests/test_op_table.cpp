#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rcq/error.hpp"

using namespace rcq;
using oracle::cyclic3;
using oracle::mixed2;
using oracle::trivial2;

TEST_CASE("validation flags") {
  auto v = validate(cyclic3());
  CHECK(v.quasigroup.holds);
  CHECK(v.rc.holds);
  CHECK(v.bijective.holds);
  CHECK(v.ok());

  CHECK(validate(trivial2()).ok());

  auto m = validate(mixed2());
  CHECK(m.quasigroup.holds);
  CHECK_FALSE(m.rc.holds);
  CHECK(m.rc.witness == std::vector<Elem>{0, 1, 0});
  CHECK_THROWS_AS(require_bijective_rc_quasigroup(mixed2()), PropertyError);
}

TEST_CASE("non-quasigroup table") {
  OpTable t({"a", "b"}, std::vector<std::vector<Elem>>{{0, 0}, {0, 1}});
  auto v = validate(t);
  CHECK_FALSE(v.quasigroup.holds);
  CHECK(v.quasigroup.witness.size() == 3);
  CHECK_FALSE(v.is_bijective_rc_quasigroup());
}

TEST_CASE("reserved and duplicate labels") {
  using Rows = std::vector<std::vector<Elem>>;
  CHECK_THROWS_AS(OpTable({"a", "a"}, Rows{{0, 1}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(OpTable({"1", "a"}, Rows{{0, 1}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(OpTable({"a b", "c"}, Rows{{0, 1}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(OpTable({"a'", "c"}, Rows{{0, 1}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(OpTable({"a", "b"}, Rows{{0, 1}, {0, 2}}), StructuralError);
}

TEST_CASE("left operation") {
  auto c = derive_left_operation(cyclic3());
  for (Elem i = 0; i < 3; ++i) {
    for (Elem j = 0; j < 3; ++j) {
      CHECK(c.lop(i, j) == (i + 2) % 3);
      // (y*x) ~ (x*y) = x
      CHECK(c.lop(c.op(j, i), c.op(i, j)) == i);
    }
  }
  auto t = derive_left_operation(trivial2());
  CHECK(t.lop(0, 1) == 0);
  CHECK(t.lop(1, 0) == 1);
  CHECK_THROWS_AS(derive_left_operation(mixed2()), NotBijectiveError);
}

TEST_CASE("left operation obeys LC on every small table") {
  for (auto const& T0 : oracle::all_tables_up_to(3)) {
    auto T = derive_left_operation(T0);
    auto v = validate(T);
    REQUIRE(v.lc);
    CHECK(v.lc->holds);
    CHECK(v.involutive_pair->holds);
  }
}

TEST_CASE("supplied left operation is checked") {
  auto c = derive_left_operation(cyclic3());
  std::vector<Elem> wrong = c.lop_data();
  std::swap(wrong[0], wrong[3]);
  auto bad = cyclic3().with_lop(wrong);
  auto v = validate(bad);
  REQUIRE(v.involutive_pair);
  CHECK_FALSE(v.ok());
}

TEST_CASE("solution of the braid equation") {
  auto rho = to_ybe(cyclic3());
  CHECK(rho.first(0, 0) == 2);
  CHECK(rho.second(0, 0) == 1);
  CHECK(validate_ybe(rho).ok());
  CHECK(from_ybe(rho) == cyclic3());

  auto r2 = to_ybe(trivial2());
  for (Elem s = 0; s < 2; ++s) {
    for (Elem t = 0; t < 2; ++t) {
      CHECK(r2.first(s, t) == t);
      CHECK(r2.second(s, t) == s);
    }
  }
}

TEST_CASE("round trip through solutions for every small table") {
  for (auto const& T : oracle::all_tables_up_to(4)) {
    auto rho = to_ybe(T);
    CHECK(validate_ybe(rho).ok());
    CHECK(from_ybe(rho) == T);
    auto b = to_birack(T);
    CHECK(validate_birack(b).ok());
    CHECK(from_birack(b) == T);
  }
}

TEST_CASE("degenerate solution is flagged") {
  YbeSolution rho{{"a", "b"}, {0, 0, 0, 0}, {0, 1, 0, 1}};
  auto r = validate_ybe(rho);
  CHECK_FALSE(r.ok());
}

TEST_CASE("birack of the cyclic table") {
  auto b = to_birack(cyclic3());
  CHECK(b.up_op(0, 1) == 0);
  CHECK(b.down_op(0, 1) == 1);
  auto r = validate_birack(b);
  CHECK(r.rack4.holds);
  CHECK(r.ok());
  CHECK(from_birack(to_birack(trivial2())) == trivial2());
}

TEST_CASE("cube condition") {
  CHECK(check_cube_condition(cyclic3()).holds);
  CHECK(check_cube_condition(trivial2()).holds);
  auto f = check_cube_condition(mixed2());
  CHECK_FALSE(f.holds);
  CHECK(f.witness == std::vector<Elem>{0, 1, 0});
}

namespace {

std::vector<std::vector<std::optional<Elem>>> off_diagonal(OpTable const& T) {
  std::vector<std::vector<std::optional<Elem>>> p(T.size(),
                                                  std::vector<std::optional<Elem>>(T.size()));
  for (Elem s = 0; s < T.size(); ++s) {
    for (Elem t = 0; t < T.size(); ++t) {
      if (s != t) {
        p[s][t] = T.op(s, t);
      }
    }
  }
  return p;
}

}  // namespace

TEST_CASE("reconstruction from the complement") {
  CHECK(reconstruct_from_complement({"a", "b", "c"}, off_diagonal(cyclic3())) == cyclic3());
  CHECK(reconstruct_from_complement({"a", "b"}, off_diagonal(trivial2())) == trivial2());

  // dual braid monoid <a,b,c | ab = bc = ca>
  std::vector<std::vector<std::optional<Elem>>> dual{
      {std::nullopt, 1, 1}, {2, std::nullopt, 2}, {0, 0, std::nullopt}};
  try {
    reconstruct_from_complement({"a", "b", "c"}, dual);
    FAIL("expected an injectivity error");
  } catch (InjectivityError const& e) {
    CHECK(e.witness() == std::vector<Elem>{0, 1, 2});
  }
}

TEST_CASE("reconstruction of every small table") {
  for (auto const& T : oracle::all_tables_up_to(4)) {
    CHECK(reconstruct_from_complement(T.names(), off_diagonal(T)) == T);
  }
}

TEST_CASE("cube condition equals the RC flag on all two-element tables") {
  for (std::uint32_t code = 0; code < 16; ++code) {
    std::vector<Elem> op{code & 1, code >> 1 & 1, code >> 2 & 1, code >> 3 & 1};
    OpTable T({"a", "b"}, op);
    CHECK(check_cube_condition(T).holds == validate(T).rc.holds);
  }
}

TEST_CASE("conversions validate their inputs") {
  CHECK_THROWS_AS(to_ybe(mixed2()), PropertyError);
  CHECK_THROWS_AS(to_birack(mixed2()), PropertyError);
  YbeSolution degenerate{{"a", "b"}, {0, 0, 0, 0}, {0, 1, 0, 1}};
  CHECK_THROWS_AS(from_ybe(degenerate), PropertyError);
  YbeSolution not_involutive{{"a", "b"}, {1, 0, 1, 0}, {0, 0, 1, 1}};
  CHECK_FALSE(validate_ybe(not_involutive).involutive.holds);
  CHECK_THROWS_AS(from_ybe(not_involutive), PropertyError);
  CHECK_THROWS_AS(from_ybe(YbeSolution{{"a", "b"}, {0, 1, 0, 5}, {0, 0, 1, 1}}),
                  StructuralError);
  Birack b{{"a", "b"}, {0, 0, 0, 0}, {0, 1, 0, 1}};
  CHECK_THROWS_AS(from_birack(b), PropertyError);
}
