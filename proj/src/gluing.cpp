#include "nsgr/gluing.hpp"

#include <algorithm>
#include <numeric>

#include "nsgr/error.hpp"
#include "nsgr/limits.hpp"

namespace nsgr {
namespace {

std::vector<Int> combine(const GluingSpec& spec, const std::vector<Int>& r, const std::vector<Int>& s) {
  std::vector<Int> out;
  for (Int x : r)
    for (Int y : s) out.push_back(checked_add(checked_mul(spec.b, x), checked_mul(spec.a, y)));
  return out;
}

bool is_unit_semigroup(const NumericalSemigroup& h) { return h.generators().size() == 1 && h.generators()[0] == 1; }

}  // namespace

void validate(const GluingSpec& spec) {
  if (spec.a <= 0 || spec.b <= 0) throw Error(ErrorCode::NotMember, "gluing weights must be positive");
  if (std::gcd(spec.a, spec.b) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(spec.a) + ", " + std::to_string(spec.b) + ") != 1");
  if (!spec.A.contains(spec.a)) throw Error(ErrorCode::NotMember, std::to_string(spec.a) + " is not in <A>");
  if (!spec.B.contains(spec.b)) throw Error(ErrorCode::NotMember, std::to_string(spec.b) + " is not in <B>");
}

NumericalSemigroup glue(const GluingSpec& spec) {
  validate(spec);
  std::vector<Int> gens;
  for (Int x : spec.A.generators()) gens.push_back(checked_mul(spec.b, x));
  for (Int y : spec.B.generators()) gens.push_back(checked_mul(spec.a, y));
  return NumericalSemigroup(gens);
}

Int glued_frobenius(const GluingSpec& spec) {
  validate(spec);
  return checked_add(checked_add(checked_mul(spec.b, spec.A.frobenius()), checked_mul(spec.a, spec.B.frobenius())),
                     checked_mul(spec.a, spec.b));
}

std::vector<Int> glued_pf(const GluingSpec& spec) {
  validate(spec);
  auto out = combine(spec, pseudo_frobenius(spec.A), pseudo_frobenius(spec.B));
  for (Int& x : out) x = checked_add(x, checked_mul(spec.a, spec.b));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal glued_canonical(const GluingSpec& spec) {
  const auto h = std::make_shared<const NumericalSemigroup>(glue(spec));
  return ideal_from_exponents(h, combine(spec, canonical_ideal(spec.A).exponents(), canonical_ideal(spec.B).exponents()));
}

MonomialIdeal transfer_semidualizing(const GluingSpec& spec, const std::vector<Int>& i1, const std::vector<Int>& i2) {
  if (i1.empty() || i2.empty()) throw Error(ErrorCode::InvalidInput, "transferred ideals need generators");
  const auto h = std::make_shared<const NumericalSemigroup>(glue(spec));
  return ideal_from_exponents(h, combine(spec, i1, i2));
}

TransferReport transfer_report(const GluingSpec& spec, const std::vector<Int>& i1, const std::vector<Int>& i2) {
  MonomialIdeal ideal = transfer_semidualizing(spec, i1, i2);
  const TrivialTag tag = is_trivial(ideal);
  const bool hom = hom_is_ring(ideal);
  CertificateReport cert = certify_semidualizing(ideal);
  return {std::move(ideal), tag, hom, std::move(cert)};
}

std::string PresentationRelation::str() const {
  std::string s = "x_" + std::to_string(c.size() + 1) + "^" + std::to_string(b) + " -";
  bool any = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    s += " x_" + std::to_string(i + 1);
    if (c[i] != 1) s += "^" + std::to_string(c[i]);
    any = true;
  }
  if (!any) s += " 1";
  return s;
}

PresentationRelation presentation_relation(const GluingSpec& spec) {
  validate(spec);
  if (!is_unit_semigroup(spec.B))
    throw Error(ErrorCode::PreconditionViolated, "the presentation relation is defined for B = <1>");
  const auto& gens = spec.A.generators();
  const std::size_t h = gens.size();
  std::vector<Int> c(h, 0), best;
  std::size_t best_support = h + 1;
  std::int64_t visited = 0;
  const std::int64_t budget = resource_limits().points;

  // Depth-first over c_0, c_1, ... with c_i ascending, so the first
  // representation met for each support size is lexicographically smallest.
  auto search = [&](auto&& self, std::size_t i, Int rest, std::size_t support) -> void {
    if (++visited > budget) throw Error(ErrorCode::CapExceeded, "representation search exceeds point cap");
    if (rest == 0) {
      if (support < best_support) {
        best_support = support;
        best = c;
      }
      return;
    }
    if (i == h) return;
    for (Int k = 0; k * gens[i] <= rest; ++k) {
      c[i] = k;
      const std::size_t s = support + (k > 0 ? 1 : 0);
      if (s >= best_support) continue;  // ties come later in lex order
      self(self, i + 1, rest - k * gens[i], s);
    }
    c[i] = 0;
  };
  search(search, 0, spec.a, 0);
  if (best.empty()) throw Error(ErrorCode::RepresentationNotFound, std::to_string(spec.a) + " has no representation");
  return {spec.b, best};
}

Construction construct_for_multiplicity(Int a) {
  if (a < 9) throw Error(ErrorCode::InvalidInput, "the construction needs multiplicity at least 9");
  std::string name = "H1";
  std::vector<Int> base{9, 10, 11, 12, 15};
  if (a == 13) {
    name = "H2";
    base = {9, 11, 12, 13, 15};
  } else if (a == 14 || a == 16) {
    name = "H3";
    base = {9, 12, 14, 15, 16};
  } else if (a == 17) {
    name = "H4";
    base = {9, 12, 15, 17, 19};
  }
  Int b = 1;
  if (a > 9) {
    b = 2;
    while (std::gcd(a, b) != 1 || 9 * b <= a) ++b;
  }
  GluingSpec spec{NumericalSemigroup(base), NumericalSemigroup{1}, a, b};
  const auto found = search_nontrivial(spec.A);
  if (found.empty()) throw Error(ErrorCode::RepresentationNotFound, "base " + name + " has no certified ideal");
  NumericalSemigroup glued = glue(spec);
  MonomialIdeal canonical = glued_canonical(spec);
  TransferReport transfer = transfer_report(spec, found.front().ideal.exponents(), {0});
  return {name, std::move(spec), std::move(glued), std::move(canonical), std::move(transfer)};
}

}  // namespace nsgr
