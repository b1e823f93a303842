#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "specsl/constructions.hpp"
#include "specsl/core.hpp"

using namespace specsl;

namespace {

SpecSemilattice with_sq(const SpecSemilattice& s, std::vector<std::pair<int, int>> set,
                        std::vector<std::pair<int, int>> clear = {},
                        std::optional<std::optional<int>> zero = std::nullopt) {
  auto sq = s.sq_table();
  for (auto [a, b] : set) sq[static_cast<std::size_t>(a) * s.size() + b] = 1;
  for (auto [a, b] : clear) sq[static_cast<std::size_t>(a) * s.size() + b] = 0;
  return SpecSemilattice::unchecked(s.size(), s.join_table(), sq, zero ? *zero : s.zero());
}

}  // namespace

TEST_CASE("validate: 2-chain with [= as <= passes") {
  CHECK(validate(chain(2)).ok());
}

TEST_CASE("validate: 2-chain with 1 [= 0 fails S0 only") {
  const auto bad = with_sq(chain(2), {{1, 0}});
  const auto r = validate(bad);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == axiom::kS0);
  CHECK(r.violations[0].witness == std::vector<int>{1});
  CHECK(replay(bad, r.violations[0]));
}

TEST_CASE("validate: deleting one [= entry can break S3 alone") {
  // Search every valid corpus structure for a single deletion whose only
  // failure is S3, then replay the reported witness.
  int found = 0;
  for (const auto& e : corpus::fixed_entries()) {
    const int n = e.s.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!e.s.sq(a, b) || e.s.leq(a, b)) continue;
        const auto broken = with_sq(e.s, {}, {{a, b}});
        const auto r = validate(broken);
        if (r.violations.size() == 1 && r.violations[0].axiom == axiom::kS3) {
          ++found;
          CHECK(replay(broken, r.violations[0]));
          CHECK(r.violations[0].witness[2] == b);
        }
      }
  }
  CHECK(found > 0);
}

TEST_CASE("validate: dropping 2 [= 1 from N2 leaves the plain chain") {
  const auto s = with_sq(truncated_naturals(2), {}, {{2, 1}});
  CHECK(validate(s).ok());
  CHECK(s == chain(3));
}

TEST_CASE("validate: frozen S3 counterexample on the diamond") {
  // x and y both specialize to the bottom, the top does not.
  const auto bad = with_sq(diamond(), {{1, 0}, {2, 0}, {1, 2}, {2, 1}}, {}, std::optional<int>{});
  const auto r = validate(bad);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == axiom::kS3);
  CHECK(r.violations[0].witness == std::vector<int>{1, 2, 0});
  CHECK(replay(bad, r.violations[0]));
}

TEST_CASE("validate: structural errors are distinct from axiom failures") {
  CHECK_THROWS_AS(SpecSemilattice::unchecked(2, {0, 1, 1}, {1, 1, 0, 1}, 0), StructuralError);
  CHECK_THROWS_AS(SpecSemilattice::unchecked(2, {0, 1, 1, 2}, {1, 1, 0, 1}, 0), StructuralError);
  CHECK_THROWS_AS(SpecSemilattice::unchecked(2, {0, 1, 1, 1}, {1, 1, 0, 1}, 5), StructuralError);
  CHECK_THROWS_AS(SpecSemilattice::create(2, {0, 1, 1, 1}, {1, 1, 1, 1}, 0), InvalidStructure);
}

TEST_CASE("validate: witnesses replay on randomly damaged structures") {
  std::mt19937 rng(7);
  int failures = 0;
  for (const auto& e : corpus::all(40)) {
    const int n = e.s.size();
    if (n < 2) continue;
    auto sq = e.s.sq_table();
    auto join = e.s.join_table();
    std::uniform_int_distribution<int> pick(0, n * n - 1);
    sq[pick(rng)] ^= 1;
    if (rng() % 3 == 0) join[pick(rng)] = static_cast<int>(rng() % n);
    const auto damaged = SpecSemilattice::unchecked(n, join, sq, e.s.zero());
    const auto r = validate(damaged);
    for (const auto& v : r.violations) {
      CHECK(replay(damaged, v));
      ++failures;
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("induced_order") {
  SUBCASE("chain") {
    const auto r = induced_order(chain(3));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(r[a][b] == (a <= b));
  }
  SUBCASE("diamond") {
    const auto r = induced_order(diamond());
    CHECK_FALSE(r[1][2]);
    CHECK_FALSE(r[2][1]);
    for (int a = 0; a < 4; ++a) {
      CHECK(r[0][a]);
      CHECK(r[a][3]);
    }
  }
  SUBCASE("partial order on every corpus semilattice") {
    for (const auto& e : corpus::all(50)) {
      const auto r = induced_order(e.s);
      const int n = e.s.size();
      for (int a = 0; a < n; ++a) {
        CHECK(r[a][a]);
        for (int b = 0; b < n; ++b) {
          if (a != b && r[a][b]) CHECK_FALSE(r[b][a]);
          for (int c = 0; c < n; ++c)
            if (r[a][b] && r[b][c]) CHECK(r[a][c]);
        }
      }
    }
  }
}

TEST_CASE("check_s7 passes on valid structures and replays on broken ones") {
  CHECK(check_s7(chain(2)).ok());
  for (const auto& e : corpus::all()) CHECK_MESSAGE(check_s7(e.s).ok(), e.name);
  const auto broken =
      with_sq(diamond(), {{1, 0}, {2, 0}, {1, 2}, {2, 1}}, {}, std::optional<int>{});
  const auto r = check_s7(broken);
  REQUIRE_FALSE(r.ok());
  CHECK(replay(broken, r.violations[0]));
}

TEST_CASE("closure_of") {
  CHECK(closure_of(chain(2), 1) == 1);
  CHECK(closure_of(truncated_naturals(3), 2) == 3);
  CHECK(closure_of(counterexample_target(), 1) == 2);
  CHECK_THROWS_AS(closure_of(chain(2), 2), StructuralError);

  // Nothing is [= 0 here, so 0 has no closure.
  const auto raw = SpecSemilattice::unchecked(2, chain(2).join_table(), {0, 1, 0, 1}, std::nullopt);
  CHECK_FALSE(closure_of(raw, 0).has_value());
  CHECK_FALSE(is_principal(raw));
  CHECK_THROWS_AS(is_additive(raw), PreconditionError);
}

TEST_CASE("closure_of agrees with the scanning oracle on the corpus") {
  for (const auto& e : corpus::all()) {
    for (int a = 0; a < e.s.size(); ++a) CHECK(closure_of(e.s, a) == oracle::closure(e.s, a));
  }
}

TEST_CASE("principal and additive") {
  const auto space = nonadditive_space();
  CHECK(is_principal(space));
  CHECK_FALSE(is_additive(space));
  // K{p,q} = X while K{p} v K{q} = {p,q}
  CHECK(closure_of(space, 0b011) == 0b111);
  CHECK(space.join(*closure_of(space, 0b001), *closure_of(space, 0b010)) == 0b011);

  const auto n3 = truncated_naturals(3);
  CHECK(is_principal(n3));
  CHECK(is_additive(n3));
}

TEST_CASE("to_closure_semilattice") {
  CHECK(to_closure_semilattice(chain(2)).closure_table() == std::vector<int>{0, 1});
  CHECK(to_closure_semilattice(truncated_naturals(3)).closure_table() ==
        std::vector<int>{0, 3, 3, 3});
  CHECK(to_closure_semilattice(counterexample_target()).closure_table() ==
        std::vector<int>{0, 2, 2});
  CHECK(to_closure_semilattice(nonadditive_space()).closure_table() ==
        std::vector<int>{0, 1, 2, 7, 4, 7, 7, 7});
}

TEST_CASE("from_closure_semilattice") {
  SUBCASE("identity closure gives [= as <=") {
    for (const auto& s : {chain(3), diamond()}) {
      std::vector<int> id(static_cast<std::size_t>(s.size()));
      for (int i = 0; i < s.size(); ++i) id[i] = i;
      const auto c = ClosureSemilattice::create(s.size(), s.join_table(), id, s.zero());
      CHECK(from_closure_semilattice(c) == s);
    }
  }
  SUBCASE("K = [0,2,2] on the 3-chain adds 2 [= 1") {
    const auto c = ClosureSemilattice::create(3, chain(3).join_table(), {0, 2, 2}, 0);
    CHECK(from_closure_semilattice(c) == counterexample_target());
  }
  SUBCASE("non-additive space round-trips") {
    const auto s = nonadditive_space();
    const auto c = to_closure_semilattice(s);
    CHECK(from_closure_semilattice(c) == s);
    CHECK(to_closure_semilattice(from_closure_semilattice(c)) == c);
  }
  SUBCASE("invalid closure is rejected") {
    const auto c = ClosureSemilattice::unchecked(3, chain(3).join_table(), {1, 1, 2}, 0);
    CHECK_THROWS_AS(from_closure_semilattice(c), InvalidStructure);
    const auto not_extensive = ClosureSemilattice::unchecked(2, chain(2).join_table(), {0, 0}, 0);
    CHECK(validate(not_extensive).has(axiom::kExtensive));
  }
}

TEST_CASE("closure semilattice laws on the corpus") {
  for (const auto& e : corpus::all()) {
    const auto c = to_closure_semilattice(e.s);
    CHECK(validate(c).ok());
    CHECK(from_closure_semilattice(c) == e.s);
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) {
        // K(a v b) = K(a v K b)
        CHECK(c.closure(c.join(a, b)) == c.closure(c.join(a, c.closure(b))));
        // K a <= K b iff a [= b
        CHECK(c.leq(c.closure(a), c.closure(b)) == e.s.sq(a, b));
        CHECK((c.closure(a) == c.closure(b)) == (e.s.sq(a, b) && e.s.sq(b, a)));
      }
  }
}
