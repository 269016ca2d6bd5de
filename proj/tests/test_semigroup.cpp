#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nsgr/error.hpp"
#include "nsgr/semigroup.hpp"
#include "oracles.hpp"

using namespace nsgr;

namespace {

std::vector<std::vector<Int>> corpus(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Int>> out;
  for (int k = 0; k < n; ++k) out.push_back(oracle::random_semigroup(rng, 2, 11, 4, 25));
  return out;
}

// Every semigroup with multiplicity m and Frobenius number at most cap, by
// testing closure of each candidate set.
std::set<std::vector<Int>> brute_semigroups(Int m, Int cap) {
  std::set<std::vector<Int>> out;
  const Int free = cap - m;  // positions m+1..cap
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    auto in = [&](Int x) {
      if (x == 0 || x == m || x > cap) return true;
      if (x < m) return false;
      return ((mask >> (x - m - 1)) & 1) != 0;
    };
    bool closed = true;
    for (Int a = m; a <= cap && closed; ++a)
      for (Int b = a; a + b <= cap && closed; ++b)
        if (in(a) && in(b) && !in(a + b)) closed = false;
    if (!closed) continue;
    std::vector<Int> gens;
    for (Int x = m; x <= cap + m; ++x) {
      if (!in(x)) continue;
      bool decomposable = false;
      for (Int y = m; y <= x - m && !decomposable; ++y)
        if (in(y) && in(x - y)) decomposable = true;
      if (!decomposable) gens.push_back(x);
    }
    out.insert(gens);
  }
  return out;
}

}  // namespace

TEST_CASE("membership agrees with the coin recurrence") {
  for (const auto& gens : corpus(11, 60)) {
    const NumericalSemigroup h(gens);
    const Int bound = oracle::conductor_bound(gens) + 30;
    const auto in = oracle::members(gens, bound);
    for (Int n = -5; n < bound; ++n)
      CHECK(h.contains(n) == (n >= 0 && in[static_cast<std::size_t>(n)]));
    CHECK(h.frobenius() == oracle::frobenius(gens));
    CHECK(gaps(h) == oracle::gaps(gens));
  }
}

TEST_CASE("two generators: Sylvester formulas") {
  for (Int a = 2; a <= 12; ++a)
    for (Int b = a + 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const NumericalSemigroup h{a, b};
      CHECK(h.frobenius() == a * b - a - b);
      CHECK(static_cast<Int>(gaps(h).size()) == (a - 1) * (b - 1) / 2);
      CHECK(cm_type(h) == 1);
    }
}

TEST_CASE("pseudo-Frobenius numbers and type") {
  for (const auto& gens : corpus(12, 60)) {
    const NumericalSemigroup h(gens);
    CHECK(pseudo_frobenius(h) == oracle::pseudo_frobenius(gens));
    CHECK(cm_type(h) == static_cast<Int>(oracle::pseudo_frobenius(gens).size()));
  }
  const NumericalSemigroup h{9, 10, 11, 12, 15};
  CHECK(h.frobenius() == 17);
  CHECK(pseudo_frobenius(h) == std::vector<Int>{13, 14, 16, 17});
}

TEST_CASE("the whole of N") {
  const NumericalSemigroup n{1};
  CHECK(n.frobenius() == -1);
  CHECK(pseudo_frobenius(n) == std::vector<Int>{-1});
  CHECK(gaps(n).empty());
  CHECK(NumericalSemigroup{3, 1, 7}.generators() == std::vector<Int>{1});
}

TEST_CASE("generators are minimalized and sorted") {
  CHECK(NumericalSemigroup{10, 9, 18, 15, 11, 12, 20}.generators() == std::vector<Int>{9, 10, 11, 12, 15});
  CHECK(NumericalSemigroup{5, 5, 7}.generators() == std::vector<Int>{5, 7});
}

TEST_CASE("invalid generator lists") {
  auto code = [](std::initializer_list<Int> g) {
    try {
      NumericalSemigroup h(g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code({4, 6}) == ErrorCode::InvalidSemigroup);
  CHECK(code({}) == ErrorCode::InvalidSemigroup);
  CHECK(code({0, 3}) == ErrorCode::InvalidSemigroup);
  CHECK(code({-2, 3}) == ErrorCode::InvalidSemigroup);
}

TEST_CASE("Apéry sets") {
  const NumericalSemigroup h{9, 10, 11, 12, 15};
  CHECK(apery(h, 9).elements == std::vector<Int>{0, 10, 11, 12, 22, 23, 15, 25, 26});
  const AperySet a10 = apery(h, 10);
  CHECK(a10.elements.size() == 10);
  for (std::size_t i = 0; i < a10.elements.size(); ++i) {
    const Int w = a10.elements[i];
    CHECK(w % 10 == static_cast<Int>(i));
    CHECK(h.contains(w));
    CHECK_FALSE(h.contains(w - 10));
  }
  CHECK_THROWS_AS(apery(h, 13), Error);
}

TEST_CASE("Kunz coordinates round trip") {
  for (const auto& gens : corpus(13, 80)) {
    const NumericalSemigroup h(gens);
    if (h.multiplicity() < 3) continue;
    const KunzPoint p = kunz_coordinates(h, h.multiplicity());
    CHECK_FALSE(kunz_violation(p).has_value());
    CHECK(semigroup_from_kunz(p) == h);
  }
  CHECK(kunz_coordinates(NumericalSemigroup{9, 10, 11, 12, 15}, 9).mu == std::vector<Int>{1, 1, 1, 2, 2, 1, 2, 2});
}

TEST_CASE("Kunz points outside the polyhedron") {
  const KunzPoint bad{4, {1, 3, 1}};  // mu_1 + mu_1 < mu_2
  const auto v = kunz_violation(bad);
  REQUIRE(v.has_value());
  CHECK(*v == std::pair<Int, Int>{1, 1});
  try {
    semigroup_from_kunz(bad);
    FAIL("expected NotInPolyhedron");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInPolyhedron);
  }
  CHECK_THROWS_AS(kunz_coordinates(NumericalSemigroup{2, 3}, 2), Error);
}

TEST_CASE("enumeration matches closure brute force") {
  for (auto [m, cap] : std::vector<std::pair<Int, Int>>{{3, 14}, {4, 15}, {5, 16}, {6, 17}}) {
    std::set<std::vector<Int>> got;
    for (const auto& h : enumerate_semigroups(m, cap)) {
      CHECK(h.multiplicity() == m);
      CHECK(h.frobenius() <= cap);
      CHECK(got.insert(h.generators()).second);
    }
    CHECK(got == brute_semigroups(m, cap));
  }
}

TEST_CASE("enumeration count with all Kunz coordinates in {1, 2}") {
  // Frobenius at most 17 with m = 9 forces each coordinate into {1, 2}.
  CHECK(enumerate_semigroups(9, 17).size() == 256);
  CHECK(enumerate_semigroups(9, 10).size() == 2);
}

TEST_CASE("enumeration arguments") {
  CHECK_THROWS_AS(SemigroupEnumerator(1, 5), Error);
  CHECK_THROWS_AS(SemigroupEnumerator(5, 3), Error);
}
