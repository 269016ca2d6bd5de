#pragma once

#include <string>
#include <vector>

#include "nsgr/ideal.hpp"
#include "nsgr/sdz.hpp"

namespace nsgr {

/// The gluing <bA, aB> of <A> and <B> with weights a in <A>, b in <B>.
struct GluingSpec {
  NumericalSemigroup A;
  NumericalSemigroup B;
  Int a = 0;
  Int b = 0;
};

/// Throws NotCoprime or NotMember when the weights do not qualify.
void validate(const GluingSpec& spec);

NumericalSemigroup glue(const GluingSpec& spec);

/// b F_A + a F_B + ab.
Int glued_frobenius(const GluingSpec& spec);
/// { b f + a f' + ab : f in PF(A), f' in PF(B) }, sorted.
std::vector<Int> glued_pf(const GluingSpec& spec);

/// (t^{br + as} : t^r in K_A, t^s in K_B) over the glued semigroup.
MonomialIdeal glued_canonical(const GluingSpec& spec);

/// (t^{br + as} : t^r in I1, t^s in I2) over the glued semigroup.
MonomialIdeal transfer_semidualizing(const GluingSpec& spec, const std::vector<Int>& i1,
                                     const std::vector<Int>& i2);

struct TransferReport {
  MonomialIdeal ideal;
  TrivialTag tag;
  bool hom_is_ring;
  CertificateReport certificate;  // advisory
};

TransferReport transfer_report(const GluingSpec& spec, const std::vector<Int>& i1, const std::vector<Int>& i2);

/// f = x_{h+1}^b - prod x_i^{c_i} with a = sum c_i a_i over the generators
/// of A. Among all representations the one with fewest nonzero c_i, then the
/// lexicographically smallest c, is chosen. Requires B = <1>.
struct PresentationRelation {
  Int b = 0;
  std::vector<Int> c;

  std::string str() const;
};

PresentationRelation presentation_relation(const GluingSpec& spec);

/// A semigroup of multiplicity a >= 9 glued from one of the four bases, with
/// the transferred nontrivial semidualizing ideal.
struct Construction {
  std::string base_name;
  GluingSpec spec;
  NumericalSemigroup glued;
  MonomialIdeal canonical;
  TransferReport transfer;
};

/// Base choice: <9,11,12,13,15> for 13, <9,12,14,15,16> for 14 and 16,
/// <9,12,15,17,19> for 17, <9,10,11,12,15> otherwise; b is the least integer
/// coprime to a with 9b > a (b = 1 for a = 9). Throws InvalidInput for a < 9.
Construction construct_for_multiplicity(Int a);

}  // namespace nsgr
