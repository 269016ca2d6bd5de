#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nsgr/checked.hpp"

namespace nsgr {

/// A numerical semigroup, stored by its unique minimal generating set.
///
/// Construction always minimalizes and validates the input. Membership is
/// answered from the Apéry set at the multiplicity, which is computed once.
class NumericalSemigroup {
 public:
  /// Throws InvalidSemigroup when `raw` is empty, has a non-positive entry,
  /// or has gcd different from 1.
  explicit NumericalSemigroup(std::span<const Int> raw);
  NumericalSemigroup(std::initializer_list<Int> raw)
      : NumericalSemigroup(std::span<const Int>(raw.begin(), raw.size())) {}

  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }

  /// Ap_e(H) for e the multiplicity; element i is the least member of H
  /// congruent to i.
  const std::vector<Int>& apery_at_multiplicity() const noexcept { return apery_; }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    const Int e = multiplicity();
    return n >= apery_[static_cast<std::size_t>(n % e)];
  }

  /// Largest integer not in H; -1 for H = N.
  Int frobenius() const noexcept { return frobenius_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
};

struct AperySet {
  Int base = 0;
  std::vector<Int> elements;
};

/// Kunz coordinates: h_i = i + mu[i-1] * m for the Apéry set with respect to m.
struct KunzPoint {
  Int m = 0;
  std::vector<Int> mu;

  friend bool operator==(const KunzPoint&, const KunzPoint&) = default;
};

NumericalSemigroup minimalize_generators(std::span<const Int> raw);

inline bool contains(const NumericalSemigroup& h, Int n) noexcept { return h.contains(n); }

/// Throws InvalidBase unless c is a positive element of H.
AperySet apery(const NumericalSemigroup& h, Int c);

inline Int frobenius(const NumericalSemigroup& h) noexcept { return h.frobenius(); }
std::vector<Int> gaps(const NumericalSemigroup& h);
/// PF(H); {-1} for H = N.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h);
Int cm_type(const NumericalSemigroup& h);

/// Throws InvalidBase when m is not in H or m < 3.
KunzPoint kunz_coordinates(const NumericalSemigroup& h, Int m);

/// Checks the Kunz inequalities (with i <= j) and returns the offending pair
/// if one fails.
std::optional<std::pair<Int, Int>> kunz_violation(const KunzPoint& p);

/// Inverse of kunz_coordinates. Throws NotInPolyhedron naming the first
/// violated inequality. A zero coordinate mu_i puts i itself into H, so the
/// result can have multiplicity below m.
NumericalSemigroup semigroup_from_kunz(const KunzPoint& p);

/// Yields every semigroup with multiplicity exactly m and Frobenius number at
/// most the cap, once each, in lexicographic order of Kunz coordinates.
class SemigroupEnumerator {
 public:
  /// Throws InvalidInput for m < 2 or cap < m - 1, CapExceeded when the Kunz
  /// box is larger than the configured point limit.
  SemigroupEnumerator(Int m, Int frobenius_cap);

  std::optional<NumericalSemigroup> next();

  Int multiplicity() const noexcept { return m_; }
  Int coordinate_cap() const noexcept { return coordinate_cap_; }

 private:
  bool advance();
  bool consistent_at(std::size_t k) const;

  Int m_;
  Int frobenius_cap_;
  Int coordinate_cap_;
  std::vector<Int> mu_;  // mu_[k] is the coordinate for residue k + 1
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<NumericalSemigroup> enumerate_semigroups(Int m, Int frobenius_cap);

}  // namespace nsgr
