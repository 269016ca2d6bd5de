#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsgr/burch.hpp"
#include "nsgr/error.hpp"
#include "nsgr/fixtures.hpp"
#include "nsgr/kunz_faces.hpp"
#include "nsgr/reproduce.hpp"
#include "nsgr/sdz.hpp"
#include "oracles.hpp"

using namespace nsgr;

namespace {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("triviality tags") {
  const auto h = std::make_shared<const NumericalSemigroup>(std::vector<Int>{9, 10, 11, 12, 15});
  CHECK(is_trivial(MonomialIdeal(h, {4})) == TrivialTag::Ring);
  CHECK(is_trivial(canonical_ideal(h)) == TrivialTag::Canonical);
  CHECK(is_trivial(canonical_ideal(h).shifted(7)) == TrivialTag::Canonical);
  CHECK(is_trivial(MonomialIdeal(h, {0, 1})) == TrivialTag::Neither);
  // Gorenstein: the canonical ideal is principal.
  const auto g = std::make_shared<const NumericalSemigroup>(std::vector<Int>{3, 4});
  CHECK(is_trivial(canonical_ideal(g)) == TrivialTag::Ring);
}

TEST_CASE("certificate for (1, t) over <9,10,11,12,15>") {
  const MonomialIdeal i(NumericalSemigroup{9, 10, 11, 12, 15}, {0, 1});
  const auto r = certify_semidualizing(i);
  CHECK(r.verdict == Verdict::Certified);
  REQUIRE(r.steps.size() == 4);
  for (const auto& s : r.steps) CHECK(s.pass);
  CHECK(hom_is_ring(i));
  CHECK(tensor_torsion_is_zero(i, dual(i)));
}

TEST_CASE("certificate verdicts stop at the first failing step") {
  const auto h = std::make_shared<const NumericalSemigroup>(std::vector<Int>{9, 10, 11, 12, 15});
  const auto k = certify_semidualizing(canonical_ideal(h));
  CHECK(k.steps.front().pass);
  CHECK(k.verdict == Verdict::Inconclusive);
  CHECK_FALSE(k.reason.empty());
  const auto three = certify_semidualizing(MonomialIdeal(h, {0, 1, 3}));
  CHECK(three.verdict == Verdict::Failed);
  CHECK(three.steps.size() == 1);
  for (Int d : gaps(*h)) {
    const auto r = certify_semidualizing(MonomialIdeal(h, {0, d}));
    REQUIRE_FALSE(r.steps.empty());
    for (std::size_t k = 0; k + 1 < r.steps.size(); ++k) CHECK(r.steps[k].pass);
    if (r.verdict == Verdict::Certified) CHECK(r.steps.size() == 4);
    if (r.verdict == Verdict::Failed) {
      CHECK_FALSE(r.steps.back().pass);
      CHECK(r.failed_step == r.steps.back().name);
    }
  }
}

TEST_CASE("tensor torsion needs two generators") {
  const auto h = std::make_shared<const NumericalSemigroup>(std::vector<Int>{5, 7, 9});
  try {
    tensor_torsion_is_zero(MonomialIdeal(h, {0}), MonomialIdeal(h, {0}));
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("search results satisfy the necessary conditions") {
  std::size_t found = 0;
  for (const auto& h : enumerate_semigroups(9, 30)) {
    for (const auto& r : search_nontrivial(h)) {
      ++found;
      const auto& i = r.ideal;
      CHECK(r.verdict == Verdict::Certified);
      CHECK(i.mu() == 2);
      CHECK(static_cast<Int>(i.mu() * dual(i).mu()) == cm_type(h));
      CHECK(is_trivial(i) == TrivialTag::Neither);
      CHECK(hom_is_ring(i));
      CHECK_FALSE(h.contains(i.gens()[1]));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("search results are ascending in d") {
  const auto found = search_nontrivial(NumericalSemigroup{9, 10, 11, 12, 15});
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().ideal.pretty() == "(1, t)");
  for (std::size_t k = 1; k < found.size(); ++k) CHECK(found[k - 1].ideal.gens()[1] < found[k].ideal.gens()[1]);
}

TEST_CASE("multiplicity at most 8: no certified nontrivial module") {
  std::size_t semigroups = 0;
  for (Int m = 2; m <= 8; ++m)
    for (const auto& h : enumerate_semigroups(m, 30)) {
      ++semigroups;
      CHECK_MESSAGE(search_nontrivial(h).empty(), "certified over <", h.generators().size(), " gens>");
    }
  CHECK(semigroups > 1000);
}

TEST_CASE("prime type: no certified nontrivial module") {
  std::size_t prime_type = 0;
  for (Int m = 3; m <= 9; ++m)
    for (const auto& h : enumerate_semigroups(m, 30)) {
      if (!is_prime(cm_type(h))) continue;
      ++prime_type;
      CHECK(search_nontrivial(h).empty());
    }
  CHECK(prime_type > 100);
}

TEST_CASE("Burch rings of the table have empty search") {
  for (const auto& row : fixtures::burch_table()) {
    if (!row.burch) continue;
    CHECK_MESSAGE(search_nontrivial(NumericalSemigroup(row.generators)).empty(), "no.", row.no);
  }
}

TEST_CASE("soundness at multiplicity 9") {
  const SweepResult s = soundness_sweep_mult9(30);
  CHECK(s.semigroups == enumerate_semigroups(9, 30).size());
  CHECK(s.certified > 0);
  CHECK(s.outside_catalog.empty());
}

TEST_CASE("no nontrivial module for <9,19,20,25,31>") {
  const NumericalSemigroup h{9, 19, 20, 25, 31};
  CHECK(search_nontrivial(h).empty());
  CHECK_FALSE(is_burch(h));
  const auto v = classify_mult9(h);
  CHECK(v.kind == ClassificationVerdict::Kind::OnlyTrivial);
  CHECK(v.reason == ClassificationVerdict::Reason::NotInFaceCatalog);
}

TEST_CASE("classification of the samples") {
  for (const auto& s : fixtures::classified_samples()) {
    const auto v = classify_mult9(NumericalSemigroup(s.generators));
    if (s.face == 0) {
      CHECK(v.kind == ClassificationVerdict::Kind::OnlyTrivial);
    } else {
      CHECK(v.kind == ClassificationVerdict::Kind::NontrivialExists);
      CHECK_MESSAGE(v.face == s.face, s.name);
      CHECK(v.str() == "NontrivialExists(F_" + std::to_string(s.face) + ")");
    }
  }
  CHECK(classify_mult9(NumericalSemigroup{8, 9, 10}).kind == ClassificationVerdict::Kind::OutOfScope);
}

TEST_CASE("certified semigroups classify as nontrivial") {
  std::size_t certified = 0;
  for (const auto& h : enumerate_semigroups(9, 30)) {
    if (search_nontrivial(h).empty()) continue;
    ++certified;
    const auto v = classify_mult9(h);
    CHECK(v.kind == ClassificationVerdict::Kind::NontrivialExists);
    CHECK(catalog_face_of(delta_of(h, 9)) == std::optional<int>(v.face));
  }
  CHECK(certified > 0);
}
