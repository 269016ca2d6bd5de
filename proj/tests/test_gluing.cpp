#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nsgr/error.hpp"
#include "nsgr/fixtures.hpp"
#include "nsgr/gluing.hpp"
#include "oracles.hpp"

using namespace nsgr;

namespace {

struct Case {
  std::vector<Int> a_gens, b_gens;
  Int a, b;
};

// Weights are non-generators of each side, coprime to each other.
std::vector<Case> corpus() {
  std::mt19937_64 rng(77);
  std::vector<Case> out;
  while (out.size() < 40) {
    auto ag = oracle::random_semigroup(rng, 2, 6, 2, 8);
    auto bg = rng() % 3 == 0 ? std::vector<Int>{1} : oracle::random_semigroup(rng, 2, 5, 2, 6);
    const NumericalSemigroup A(ag), B(bg);
    const Int a = A.generators()[0] + A.generators().back() + static_cast<Int>(rng() % 4);
    const Int b = (B.multiplicity() == 1 ? 2 : B.generators()[0] * 2) + static_cast<Int>(rng() % 3);
    if (!A.contains(a) || !B.contains(b) || std::gcd(a, b) != 1) continue;
    out.push_back({A.generators(), B.generators(), a, b});
  }
  return out;
}

std::vector<Int> glued_generators(const Case& c) {
  std::vector<Int> g;
  for (Int x : c.a_gens) g.push_back(c.b * x);
  for (Int y : c.b_gens) g.push_back(c.a * y);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  // Drop any generator already reachable from the others.
  std::vector<Int> out;
  for (Int x : g) {
    std::vector<Int> rest;
    for (Int y : g)
      if (y != x) rest.push_back(y);
    std::vector<bool> reach(static_cast<std::size_t>(x) + 1, false);
    reach[0] = true;
    for (Int n = 1; n <= x; ++n)
      for (Int y : rest)
        if (y <= n && reach[static_cast<std::size_t>(n - y)]) reach[static_cast<std::size_t>(n)] = true;
    if (!reach[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

GluingSpec spec_of(const Case& c) {
  return {NumericalSemigroup(c.a_gens), NumericalSemigroup(c.b_gens), c.a, c.b};
}

}  // namespace

TEST_CASE("glued semigroup, Frobenius number and pseudo-Frobenius numbers") {
  for (const auto& c : corpus()) {
    const auto spec = spec_of(c);
    const NumericalSemigroup g = glue(spec);
    const auto gens = glued_generators(c);
    CHECK(g.generators() == gens);
    CHECK(glued_frobenius(spec) == oracle::frobenius(gens));
    CHECK(glued_pf(spec) == oracle::pseudo_frobenius(gens));
  }
}

TEST_CASE("glued canonical ideal agrees with the direct one") {
  for (const auto& c : corpus()) {
    const auto spec = spec_of(c);
    const auto k = glued_canonical(spec);
    CHECK(equals(k, canonical_ideal(k.ambient_ptr())));
  }
}

TEST_CASE("gluing weight validation") {
  const NumericalSemigroup a{3, 5}, b{2, 3};
  auto code = [&](Int x, Int y) {
    try {
      validate({a, b, x, y});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code(6, 6) == ErrorCode::NotCoprime);
  CHECK(code(7, 5) == ErrorCode::NotMember);
  CHECK(code(8, 1) == ErrorCode::NotMember);
  CHECK_NOTHROW(validate({a, b, 8, 5}));
  CHECK_THROWS_AS(glue({a, b, 6, 6}), Error);
}

TEST_CASE("presentation relation of a gluing with <1>") {
  for (const auto& c : corpus()) {
    if (c.b_gens != std::vector<Int>{1}) continue;
    const auto spec = spec_of(c);
    const auto p = presentation_relation(spec);
    CHECK(p.b == c.b);
    REQUIRE(p.c.size() == c.a_gens.size());
    Int sum = 0;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      CHECK(p.c[i] >= 0);
      sum += p.c[i] * c.a_gens[i];
    }
    CHECK(sum == c.a);
  }
  const GluingSpec s{NumericalSemigroup{9, 10, 11, 12, 15}, NumericalSemigroup{1}, 10, 3};
  CHECK(presentation_relation(s).str() == "x_6^3 - x_2");
  const GluingSpec t{NumericalSemigroup{9, 10, 11, 12, 15}, NumericalSemigroup{1}, 20, 3};
  CHECK(presentation_relation(t).str() == "x_6^3 - x_2^2");
  CHECK_THROWS_AS(presentation_relation({NumericalSemigroup{3, 5}, NumericalSemigroup{2, 3}, 8, 5}), Error);
}

TEST_CASE("transferred ideals over the base semigroups") {
  for (const auto& base : fixtures::gluing_bases()) {
    const NumericalSemigroup h(base.generators);
    CHECK(canonical_ideal(h).exponents() == base.canonical);
    const MonomialIdeal i(h, base.ideal);
    CHECK(hom_is_ring(i));
    CHECK(is_trivial(i) == TrivialTag::Neither);
    const Int a = h.generators()[1] + 9;
    const Int b = a % 2 == 0 ? 3 : 2;
    const GluingSpec spec{h, NumericalSemigroup{1}, a, b};
    const auto r = transfer_report(spec, base.ideal, {0});
    CHECK(r.ideal.mu() == 2);
    CHECK(r.tag == TrivialTag::Neither);
    CHECK(r.hom_is_ring);
  }
}

TEST_CASE("gluing table rows") {
  const auto& rows = fixtures::gluing_table();
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) {
    const auto c = construct_for_multiplicity(row.multiplicity);
    CHECK(c.base_name == row.base);
    CHECK(c.spec.b == row.b);
    CHECK(c.glued.generators() == row.generators);
    CHECK(c.glued.multiplicity() == row.multiplicity);
    CHECK(c.canonical.exponents() == row.canonical);
    CHECK(equals(c.canonical, canonical_ideal(c.glued)));
    CHECK(c.transfer.ideal.exponents() == row.ideal);
    CHECK(c.transfer.ideal.mu() == 2);
    CHECK(c.transfer.tag == TrivialTag::Neither);
    CHECK(c.transfer.hom_is_ring);
  }
}

TEST_CASE("constructor over the admissible multiplicities") {
  const auto nine = construct_for_multiplicity(9);
  CHECK(nine.spec.b == 1);
  CHECK(nine.glued.generators() == std::vector<Int>{9, 10, 11, 12, 15});
  CHECK(nine.transfer.ideal.pretty() == "(1, t)");
  for (Int a = 9; a <= 30; ++a) {
    const auto c = construct_for_multiplicity(a);
    CHECK(c.glued.multiplicity() == a);
    CHECK(std::gcd(a, c.spec.b) == 1);
    if (a > 9) CHECK(9 * c.spec.b > a);
    CHECK(c.transfer.ideal.mu() == 2);
    CHECK(c.transfer.tag == TrivialTag::Neither);
    CHECK(c.transfer.hom_is_ring);
  }
  for (Int a : {-1, 0, 1, 8}) {
    try {
      construct_for_multiplicity(a);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
}
