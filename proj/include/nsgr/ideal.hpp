#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nsgr/semigroup.hpp"

namespace nsgr {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

/// A monomial fractional ideal of k[[H]], stored as its minimal exponent set.
///
/// The exponents are kept as `shift + gens` with gens[0] == 0, so two ideals
/// that differ by multiplication with a monomial share `gens`. The value set
/// is v(I) = union of (e + H) over the exponents e.
class MonomialIdeal {
 public:
  /// Minimal generators of the ideal generated by t^e for e in `exponents`.
  /// Throws InvalidInput when `exponents` is empty.
  MonomialIdeal(SemigroupPtr ambient, std::vector<Int> exponents);
  MonomialIdeal(const NumericalSemigroup& ambient, std::vector<Int> exponents);

  /// The unit ideal R = (1).
  static MonomialIdeal ring(SemigroupPtr ambient) { return MonomialIdeal(std::move(ambient), {0}); }

  const NumericalSemigroup& ambient() const noexcept { return *ambient_; }
  const SemigroupPtr& ambient_ptr() const noexcept { return ambient_; }

  Int shift() const noexcept { return shift_; }
  const std::vector<Int>& gens() const noexcept { return gens_; }
  std::vector<Int> exponents() const;
  Int min_exponent() const noexcept { return shift_; }
  Int max_exponent() const noexcept { return shift_ + gens_.back(); }

  /// Same gens, shift 0.
  MonomialIdeal normalized() const;
  /// Multiplication by t^by.
  MonomialIdeal shifted(Int by) const;

  bool value_contains(Int x) const noexcept {
    for (Int g : gens_)
      if (ambient_->contains(x - shift_ - g)) return true;
    return false;
  }

  std::size_t mu() const noexcept { return gens_.size(); }

  /// "(1, t, t^3)" style rendering of the actual exponents.
  std::string pretty() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  SemigroupPtr ambient_;
  Int shift_ = 0;
  std::vector<Int> gens_;
};

MonomialIdeal ideal_from_exponents(const NumericalSemigroup& h, std::vector<Int> exps);
MonomialIdeal ideal_from_exponents(SemigroupPtr h, std::vector<Int> exps);

bool same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) noexcept;

inline bool value_contains(const MonomialIdeal& i, Int x) noexcept { return i.value_contains(x); }
inline std::size_t mu(const MonomialIdeal& i) noexcept { return i.mu(); }

/// Exact equality of value sets. Throws AmbientMismatch.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// Equality after normalizing both shifts to zero. Throws AmbientMismatch.
bool equal_up_to_shift(const MonomialIdeal& a, const MonomialIdeal& b);
/// v(a) is contained in v(b). Throws AmbientMismatch.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// IJ; the value set is the sumset v(I) + v(J).
MonomialIdeal multiply(const MonomialIdeal& i, const MonomialIdeal& j);
inline MonomialIdeal operator*(const MonomialIdeal& i, const MonomialIdeal& j) { return multiply(i, j); }

/// I : J = { x : x + v(J) inside v(I) }, in actual (possibly negative) exponents.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);

/// J1 :_R t^g = { x in H : x + g in v(J1) }.
MonomialIdeal colon_in_ring(const MonomialIdeal& j1, Int g);

/// K = (t^(F - f) : f in PF(H)).
MonomialIdeal canonical_ideal(const NumericalSemigroup& h);
MonomialIdeal canonical_ideal(SemigroupPtr h);

/// I^dual = K : I.
MonomialIdeal dual(const MonomialIdeal& i);

}  // namespace nsgr
