#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsgr/ideal.hpp"
#include "nsgr/kunz_faces.hpp"

namespace nsgr {

enum class TrivialTag { Ring, Canonical, Neither };

constexpr const char* to_string(TrivialTag t) noexcept {
  switch (t) {
    case TrivialTag::Ring: return "Ring";
    case TrivialTag::Canonical: return "Canonical";
    case TrivialTag::Neither: return "Neither";
  }
  return "?";
}

/// Ring when I is principal, Canonical when I is K up to shift.
TrivialTag is_trivial(const MonomialIdeal& i);

/// I (K : I) = K up to shift, i.e. Hom(I, I) is the ring.
bool hom_is_ring(const MonomialIdeal& i);

/// (J : I) = (R : I) J, i.e. the tensor product of I and J is torsion-free.
/// Throws PreconditionViolated unless mu(I) = 2.
bool tensor_torsion_is_zero(const MonomialIdeal& i, const MonomialIdeal& j);

struct CertificateStep {
  std::string name;
  bool pass = false;
  std::optional<MonomialIdeal> lhs;
  std::optional<MonomialIdeal> rhs;
  std::string note;
};

enum class Verdict { Certified, Failed, Inconclusive };

constexpr const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Failed: return "Failed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct CertificateReport {
  MonomialIdeal ideal;
  std::vector<CertificateStep> steps;
  Verdict verdict = Verdict::Inconclusive;
  std::string failed_step;  // set for Failed
  std::string reason;       // set for Inconclusive
};

/// Runs the checks C1..C4 in order and stops at the first one that does not
/// pass. Equality failures give Failed, a missing structural hypothesis
/// (mu(I) != 2, mu(dual) != 2, no usable generator of R:I) gives
/// Inconclusive.
CertificateReport certify_semidualizing(const MonomialIdeal& i);

/// Certified, nontrivial ideals (1, t^d) for d a gap, ascending in d.
std::vector<CertificateReport> search_nontrivial(const NumericalSemigroup& h);
std::vector<CertificateReport> search_nontrivial(SemigroupPtr h);

struct ClassificationVerdict {
  enum class Kind { NontrivialExists, OnlyTrivial, OutOfScope };
  enum class Reason { None, BurchCertificate, NotInFaceCatalog };

  Kind kind = Kind::OutOfScope;
  int face = 0;
  Reason reason = Reason::None;
  FaceDelta delta;

  std::string str() const;
};

/// Multiplicity-9 classification by exact face membership, with the Burch
/// check as the reason when the delta is outside the catalog.
ClassificationVerdict classify_mult9(const NumericalSemigroup& h);

}  // namespace nsgr
