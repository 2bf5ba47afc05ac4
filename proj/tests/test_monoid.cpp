#include <algorithm>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rcq/calculus.hpp"
#include "rcq/error.hpp"
#include "rcq/io.hpp"
#include "rcq/monoid.hpp"

using namespace rcq;
using oracle::cyclic3;

namespace {

MonoidElement w(StructureMonoid const& M, char const* text) {
  return M.element_from_word(parse_word(M.table(), text));
}

Perm psi_of_word(OpTable const& T, Word const& u) {
  Perm p = Perm::identity(T.size());
  for (Elem s : u) {
    p = compose(T.left_translation(s), p);
  }
  return p;
}

bool componentwise_le(Coords const& a, Coords const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

TEST_CASE("coordinates from words") {
  StructureMonoid M(cyclic3());
  CHECK(w(M, "a a").coords() == Coords{1, 0, 1});
  CHECK(w(M, "a c").coords() == Coords{1, 1, 0});
  CHECK(w(M, "b b").coords() == Coords{1, 1, 0});
  CHECK(M.one().coords() == Coords{0, 0, 0});
  CHECK(M.one().psi().is_identity());
  CHECK(M.canonical_word(M.element({1, 1, 1})) == Word{0, 2, 1});
  CHECK(M.format(M.element({2, 0, 0})) == "a b");
  CHECK(M.format(M.element({0, 0, 1})) == "c");
  CHECK(M.format(M.one()) == "1");
  CHECK(M.psi_of({1, 0, 0}) == Perm({1, 2, 0}));
  CHECK(M.psi_of({1, 1, 1}).is_identity());
  CHECK(M.psi_of({0, 0, 0}).is_identity());
  CHECK_THROWS_AS(M.element({1, -1, 0}), StructuralError);
  CHECK_THROWS_AS(M.element({1, 0}), StructuralError);
}

TEST_CASE("products") {
  StructureMonoid M(cyclic3());
  CHECK(M.multiply(w(M, "a a"), w(M, "a")).coords() == Coords{1, 1, 1});
  CHECK(M.multiply(w(M, "a"), w(M, "c")) == M.multiply(w(M, "b"), w(M, "b")));
  auto g = w(M, "a b b c");
  CHECK(M.multiply(g, M.one()) == g);
  CHECK(M.multiply(M.one(), g) == g);
  CHECK(M.power(w(M, "a"), 3) == M.delta());
  CHECK(M.delta() == w(M, "b b b"));
  CHECK(M.delta() == w(M, "c c c"));
}

TEST_CASE("word problem examples") {
  StructureMonoid M(cyclic3());
  auto T = M.table();
  auto both = [&](char const* u, char const* v) {
    bool a = M.word_problem(parse_word(T, u), parse_word(T, v));
    auto b = oracle_equal_bfs(T, parse_word(T, u), parse_word(T, v));
    CHECK((b == OracleVerdict::equal) == a);
    CHECK(b != OracleVerdict::inconclusive);
    return a;
  };
  CHECK(both("a c", "b b"));
  CHECK_FALSE(both("a", "b"));
  CHECK(both("a c b", "a a a"));
  CHECK_FALSE(both("a b", "b a"));
}

TEST_CASE("divisibility and lcms on the cyclic table") {
  StructureMonoid M(cyclic3());
  CHECK(M.right_lcm(w(M, "a"), w(M, "b")) == w(M, "b b"));
  CHECK(M.left_gcd(w(M, "a a"), w(M, "b b")) == w(M, "a"));
  CHECK(M.right_complement(w(M, "a"), w(M, "b")) == w(M, "c"));
  CHECK(M.left_divides(w(M, "a"), w(M, "b b")));
  CHECK_FALSE(M.left_divides(w(M, "b b"), w(M, "a")));
  CHECK_FALSE(M.left_quotient(w(M, "b"), w(M, "a a")));
  auto q = M.left_quotient(w(M, "a"), w(M, "a a"));
  REQUIRE(q);
  CHECK(*q == w(M, "a"));
}

TEST_CASE("garside structure of the cyclic table") {
  StructureMonoid M(cyclic3());
  auto fam = M.garside_family();
  std::set<MonoidElement> expected{M.one(),      w(M, "a"),   w(M, "b"),   w(M, "c"),
                                   w(M, "a a"),  w(M, "b b"), w(M, "c c"), M.delta()};
  CHECK(std::set<MonoidElement>(fam.begin(), fam.end()) == expected);
  CHECK(fam.size() == 8);
  CHECK(M.delta_of_subset({true, true, false}) == w(M, "b b"));
  auto nf = M.greedy_normal_form(w(M, "a a a a"));
  REQUIRE(nf.size() == 2);
  CHECK(nf[0] == M.delta());
  CHECK(nf[1] == w(M, "a"));
  CHECK(M.greedy_normal_form(M.one()).empty());
}

TEST_CASE("presentations") {
  StructureMonoid M(cyclic3());
  std::set<std::string> rels;
  for (auto const& r : M.presentation()) {
    rels.insert(format_word(M.table(), r.lhs) + "=" + format_word(M.table(), r.rhs));
  }
  CHECK(rels == std::set<std::string>{"a c=b b", "a a=c b", "b a=c c"});

  StructureMonoid T2(oracle::trivial2());
  REQUIRE(T2.presentation().size() == 1);
  CHECK(format_word(T2.table(), T2.presentation()[0].lhs) == "a b");
  CHECK(format_word(T2.table(), T2.presentation()[0].rhs) == "b a");

  StructureMonoid one(OpTable({"a"}, std::vector<std::vector<Elem>>{{0}}));
  CHECK(one.presentation().empty());
}

TEST_CASE("frozen elements") {
  StructureMonoid S(oracle::swap2());
  CHECK(S.format(S.frozen(0, 2)) == "a b");
  CHECK(S.format(S.frozen(1, 2)) == "b a");
  StructureMonoid M(cyclic3());
  CHECK(M.format(M.frozen(0, 3)) == "a b c");
  CHECK(M.frozen(1, 1) == w(M, "b"));
  CHECK(M.class_number() == 3);
}

TEST_CASE("group elements") {
  StructureMonoid M(cyclic3());
  auto a = M.group_generator(0);
  CHECK(M.group_multiply(a, M.group_inverse(a)).is_identity());
  CHECK(M.group_multiply(M.group_inverse(a), a).is_identity());
  CHECK(M.group_inverse(M.group_one()).is_identity());
  CHECK(M.group_element_from_word(parse_group_word(M.table(), "a a'")).is_identity());
  CHECK(M.group_element_from_word(parse_group_word(M.table(), "a c b' b'")).is_identity());
  CHECK(M.group_power(a, -2) == M.group_inverse(M.group_power(a, 2)));

  auto D3 = M.to_group(M.power(M.delta(), 3));
  auto D3inv = M.group_inverse(D3);
  for (Elem s = 0; s < 3; ++s) {
    auto g = M.group_generator(s);
    CHECK(M.group_multiply(D3inv, g) == M.group_multiply(g, D3inv));
  }
}

TEST_CASE("word problem matches rewriting on every small table") {
  for (auto const& T : oracle::all_tables_up_to(3)) {
    StructureMonoid M(T);
    oracle::WordLattice L(T, 4);
    for (std::size_t len = 0; len <= 4; ++len) {
      std::set<Coords> coords;
      std::uint64_t total = L.cls[len].size();
      for (std::uint64_t i = 0; i < total; ++i) {
        Word u = word_from_index(i, T.size(), len);
        auto g = M.element_from_word(u);
        coords.insert(g.coords());
        REQUIRE(g.length() == static_cast<std::int64_t>(len));
        REQUIRE(g.psi() == psi_of_word(T, u));
        REQUIRE(M.element_from_word(M.canonical_word(g)) == g);
        Word v = word_from_index(L.cls[len][i], T.size(), len);
        REQUIRE(M.element_from_word(v) == g);
      }
      CHECK(coords.size() == L.count(len));
      CHECK(coords.size() == binomial(len + T.size() - 1, T.size() - 1));
    }
  }
}

TEST_CASE("divisibility matches rewriting on every small table") {
  for (auto const& T : oracle::all_tables_up_to(3)) {
    StructureMonoid M(T);
    oracle::WordLattice L(T, 4);
    std::vector<Word> reps;
    for (std::size_t len = 0; len <= 4; ++len) {
      for (auto& u : L.representatives(len)) {
        reps.push_back(u);
      }
    }
    for (auto const& u : reps) {
      auto g = M.element_from_word(u);
      for (auto const& v : reps) {
        auto h = M.element_from_word(v);
        bool ld = M.left_divides(g, h);
        REQUIRE(ld == L.left_divides(u, v));
        REQUIRE(ld == componentwise_le(g.coords(), h.coords()));
        REQUIRE(M.right_divides(g, h) == L.right_divides(u, v));
      }
    }
  }
}

TEST_CASE("lcm and gcd are lattice operations") {
  std::mt19937_64 rng(20260101);
  for (auto const& T : oracle::all_tables_up_to(3)) {
    StructureMonoid M(T);
    auto rnd = [&] {
      return M.element_from_word(oracle::random_word(rng, T.size(), rng() % 5));
    };
    for (int k = 0; k < 100; ++k) {
      auto f = rnd(), g = rnd(), h = rnd();
      auto l = M.right_lcm(f, g);
      REQUIRE(M.left_divides(f, l));
      REQUIRE(M.left_divides(g, l));
      REQUIRE(l == M.right_lcm(g, f));
      REQUIRE(M.right_lcm(M.right_lcm(f, g), h) == M.right_lcm(f, M.right_lcm(g, h)));
      REQUIRE(M.left_gcd(M.left_gcd(f, g), h) == M.left_gcd(f, M.left_gcd(g, h)));
      REQUIRE(M.left_gcd(f, M.right_lcm(f, g)) == f);
      REQUIRE(M.right_lcm(f, M.left_gcd(f, g)) == f);
      REQUIRE(M.multiply(f, M.right_complement(f, g)) == l);
      // every common multiple is a multiple of the lcm
      auto m = M.multiply(M.multiply(f, g), h);
      auto m2 = M.multiply(l, h);
      REQUIRE(M.left_divides(l, m2));
      if (M.left_divides(g, m)) {
        REQUIRE(M.left_divides(l, m));
      }
      auto gd = M.left_gcd(f, g);
      REQUIRE(M.left_divides(gd, f));
      REQUIRE(M.left_divides(gd, g));

      auto ll = M.left_lcm(f, g);
      REQUIRE(M.right_divides(f, ll));
      REQUIRE(M.right_divides(g, ll));
      REQUIRE(M.multiply(M.left_complement(f, g), f) == ll);
      REQUIRE(M.right_gcd(g, M.left_lcm(f, g)) == g);

      REQUIRE(M.multiply(M.multiply(f, g), h) == M.multiply(f, M.multiply(g, h)));
      REQUIRE(M.multiply(f, g).length() == f.length() + g.length());
      REQUIRE(M.multiply(f, g).psi() == compose(g.psi(), f.psi()));
      // complement of an lcm
      REQUIRE(M.right_complement(f, M.right_lcm(g, h))
              == M.right_lcm(M.right_complement(f, g), M.right_complement(f, h)));
    }
  }
}

TEST_CASE("lcm of distinct letters") {
  for (auto const& T0 : oracle::all_tables_up_to(4)) {
    auto T = derive_left_operation(T0);
    StructureMonoid M(T0);
    std::size_t n = T.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Tuple x;
      std::vector<bool> subset(n, false);
      for (Elem s = 0; s < n; ++s) {
        if (mask >> s & 1) {
          x.push_back(s);
          subset[s] = true;
        }
      }
      auto lcm = M.generator(x[0]);
      for (Elem s : x) {
        lcm = M.right_lcm(lcm, M.generator(s));
      }
      do {
        CHECK(M.element_from_word(pi_word(T, x)) == lcm);
        auto left = M.one();
        for (Elem s : tilde_vector(T, x)) {
          left = M.left_lcm(left, M.generator(s));
        }
        CHECK(left == lcm);
      } while (std::next_permutation(x.begin(), x.end()));
      CHECK(M.delta_of_subset(subset) == lcm);
    }
  }
}

TEST_CASE("garside family size and closure") {
  for (auto const& T : oracle::all_tables_up_to(4)) {
    StructureMonoid M(T);
    auto fam = M.garside_family();
    std::set<MonoidElement> s(fam.begin(), fam.end());
    CHECK(fam.size() == (std::size_t{1} << T.size()));
    CHECK(s.size() == fam.size());
    for (auto const& f : fam) {
      CHECK(M.left_divides(f, M.delta()));
      for (auto const& g : fam) {
        CHECK(s.count(M.right_complement(f, g)) == 1);
        CHECK(s.count(M.right_lcm(f, g)) == 1);
      }
    }
  }
}

TEST_CASE("frozen elements act trivially and delta powers are central") {
  std::mt19937_64 rng(20260101);
  for (auto const& T : oracle::all_tables_up_to(4)) {
    StructureMonoid M(T);
    auto d = M.class_number();
    for (Elem s = 0; s < T.size(); ++s) {
      CHECK(M.frozen(s, d).psi().is_identity());
      Coords c(T.size(), 0);
      c[s] = static_cast<std::int64_t>(d);
      CHECK(M.psi_of(c).is_identity());
      CHECK(M.element(c) == M.frozen(s, d));
    }
    auto Dd = M.power(M.delta(), d);
    CHECK(Dd.psi().is_identity());
    for (int k = 0; k < 20; ++k) {
      auto g = M.element_from_word(oracle::random_word(rng, T.size(), rng() % 6));
      CHECK(M.multiply(Dd, g) == M.multiply(g, Dd));
    }
  }
}

TEST_CASE("normal forms are greedy and multiply back") {
  std::mt19937_64 rng(7);
  for (auto const& T : oracle::all_tables_up_to(3)) {
    StructureMonoid M(T);
    auto fam = M.garside_family();
    for (int k = 0; k < 50; ++k) {
      auto g = M.element_from_word(oracle::random_word(rng, T.size(), rng() % 9));
      auto nf = M.greedy_normal_form(g);
      auto prod = M.one();
      for (auto const& h : nf) {
        REQUIRE(std::find(fam.begin(), fam.end(), h) != fam.end());
        REQUIRE_FALSE(h == M.one());
        prod = M.multiply(prod, h);
      }
      REQUIRE(prod == g);
      if (!nf.empty()) {
        // the head is the largest divisor of g in the family
        for (auto const& f : fam) {
          if (M.left_divides(f, g)) {
            REQUIRE(M.left_divides(f, nf[0]));
          }
        }
      }
    }
  }
}

TEST_CASE("group arithmetic on random words") {
  std::mt19937_64 rng(11);
  for (auto const& T : oracle::all_tables_up_to(3)) {
    StructureMonoid M(T);
    for (int k = 0; k < 30; ++k) {
      GroupWord gw;
      for (std::size_t i = rng() % 7; i > 0; --i) {
        gw.push_back({static_cast<Elem>(rng() % T.size()), rng() % 2 == 0});
      }
      auto g = M.group_element_from_word(gw);
      CHECK(M.group_multiply(g, M.group_inverse(g)).is_identity());
      GroupWord inv;
      for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
        inv.push_back({it->gen, !it->inverse});
      }
      CHECK(M.group_element_from_word(inv) == M.group_inverse(g));
      CHECK(g.psi() == M.psi_reduced(g.coords()));
    }
  }
}

TEST_CASE("non-bijective tables are refused") {
  CHECK_THROWS_AS(StructureMonoid(oracle::mixed2()), PropertyError);
}
