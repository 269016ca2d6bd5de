#include "nsgr/sdz.hpp"

#include "nsgr/burch.hpp"
#include "nsgr/error.hpp"

namespace nsgr {

TrivialTag is_trivial(const MonomialIdeal& i) {
  if (i.mu() == 1) return TrivialTag::Ring;
  if (equal_up_to_shift(i, canonical_ideal(i.ambient_ptr()))) return TrivialTag::Canonical;
  return TrivialTag::Neither;
}

bool hom_is_ring(const MonomialIdeal& i) {
  const MonomialIdeal k = canonical_ideal(i.ambient_ptr());
  return equal_up_to_shift(multiply(i, colon(k, i)), k);
}

bool tensor_torsion_is_zero(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.mu() != 2)
    throw Error(ErrorCode::PreconditionViolated, "torsion criterion needs a 2-generated ideal, got mu = " +
                                                     std::to_string(i.mu()));
  const MonomialIdeal r = MonomialIdeal::ring(i.ambient_ptr());
  return equals(colon(j, i), multiply(colon(r, i), j));
}

CertificateReport certify_semidualizing(const MonomialIdeal& input) {
  const MonomialIdeal i = input.normalized();
  const SemigroupPtr& h = i.ambient_ptr();
  const MonomialIdeal r = MonomialIdeal::ring(h);
  const MonomialIdeal k = canonical_ideal(h);
  CertificateReport report{i, {}, Verdict::Inconclusive, {}, {}};

  auto fail = [&](const std::string& step) {
    report.verdict = Verdict::Failed;
    report.failed_step = step;
    return report;
  };
  auto inconclusive = [&](const std::string& why) {
    report.verdict = Verdict::Inconclusive;
    report.reason = why;
    return report;
  };

  // C1: Hom(I, I) = R.
  const MonomialIdeal i_dual = colon(k, i);
  const MonomialIdeal c1 = multiply(i, i_dual);
  report.steps.push_back({"C1", equal_up_to_shift(c1, k), c1, k, "I(K:I) = K"});
  if (!report.steps.back().pass) return fail("C1");

  // C2: Ext^1(I, I) = 0.
  if (i.mu() != 2) return inconclusive("mu(I) = " + std::to_string(i.mu()) + ", not 2");
  const MonomialIdeal dual_i = dual(i);
  const MonomialIdeal r_i = colon(r, i);
  const MonomialIdeal c2_lhs = colon(dual_i, i);
  const MonomialIdeal c2_rhs = multiply(r_i, dual_i);
  report.steps.push_back({"C2", equals(c2_lhs, c2_rhs), c2_lhs, c2_rhs, "(I_dual:I) = (R:I) I_dual"});
  if (!report.steps.back().pass) return fail("C2");

  // C3: Ext^2(I, I) = 0.
  if (dual_i.mu() != 2) return inconclusive("mu(I_dual) = " + std::to_string(dual_i.mu()) + ", not 2");
  const MonomialIdeal c3_lhs = colon(r_i, dual_i);
  const MonomialIdeal c3_rhs = multiply(colon(r, dual_i), r_i);
  report.steps.push_back({"C3", equals(c3_lhs, c3_rhs), c3_lhs, c3_rhs, "(R:I):I_dual = (R:I_dual)(R:I)"});
  if (!report.steps.back().pass) return fail("C3");

  // C4: the periodicity sequence 0 -> I -> R:I -> R/((p, q) :_R g3) -> 0.
  if (r_i.mu() != 3) return inconclusive("mu(R:I) = " + std::to_string(r_i.mu()) + ", not 3");
  const Int d = i.gens()[1];
  const auto gens = r_i.exponents();
  bool shaped = false;
  for (std::size_t pick = 0; pick < 3; ++pick) {
    std::vector<Int> pair;
    for (std::size_t t = 0; t < 3; ++t)
      if (t != pick) pair.push_back(gens[t]);
    if (pair[1] - pair[0] != d) continue;
    shaped = true;
    const MonomialIdeal lhs = colon_in_ring(MonomialIdeal(h, pair), gens[pick]);
    if (equals(lhs, r_i)) {
      report.steps.push_back({"C4", true, lhs, r_i,
                              "(t^" + std::to_string(pair[0]) + ", t^" + std::to_string(pair[1]) + ") :_R t^" +
                                  std::to_string(gens[pick]) + " = R:I"});
      report.verdict = Verdict::Certified;
      return report;
    }
  }
  if (!shaped) return inconclusive("no two generators of R:I differ by " + std::to_string(d));
  report.steps.push_back({"C4", false, std::nullopt, r_i, "no generator of R:I closes the sequence"});
  return fail("C4");
}

std::vector<CertificateReport> search_nontrivial(SemigroupPtr h) {
  std::vector<CertificateReport> out;
  const Int type = cm_type(*h);
  for (Int d : gaps(*h)) {
    if (d < 1) continue;
    const MonomialIdeal i(h, {0, d});
    if (static_cast<Int>(i.mu() * dual(i).mu()) != type) continue;
    if (is_trivial(i) != TrivialTag::Neither) continue;
    auto report = certify_semidualizing(i);
    if (report.verdict == Verdict::Certified) out.push_back(std::move(report));
  }
  return out;
}

std::vector<CertificateReport> search_nontrivial(const NumericalSemigroup& h) {
  return search_nontrivial(std::make_shared<const NumericalSemigroup>(h));
}

std::string ClassificationVerdict::str() const {
  switch (kind) {
    case Kind::NontrivialExists: return "NontrivialExists(F_" + std::to_string(face) + ")";
    case Kind::OnlyTrivial:
      return std::string("OnlyTrivial(") + (reason == Reason::BurchCertificate ? "BurchCertificate" : "NotInFaceCatalog") +
             ")";
    case Kind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

ClassificationVerdict classify_mult9(const NumericalSemigroup& h) {
  ClassificationVerdict v;
  if (h.multiplicity() != 9) return v;
  v.delta = delta_of(h, 9);
  if (auto face = catalog_face_of(v.delta)) {
    v.kind = ClassificationVerdict::Kind::NontrivialExists;
    v.face = *face;
    return v;
  }
  v.kind = ClassificationVerdict::Kind::OnlyTrivial;
  v.reason = is_burch(h) ? ClassificationVerdict::Reason::BurchCertificate
                         : ClassificationVerdict::Reason::NotInFaceCatalog;
  return v;
}

}  // namespace nsgr
