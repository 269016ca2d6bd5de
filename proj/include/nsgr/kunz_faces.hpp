#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsgr/semigroup.hpp"

namespace nsgr {

/// The hyperplanes E_ij of Kunz's polyhedron containing a point, as pairs
/// (i, j) with 1 <= i <= j <= m - 1 and i + j not divisible by m.
struct FaceDelta {
  Int m = 9;
  std::vector<std::pair<Int, Int>> pairs;  // sorted, i <= j

  FaceDelta() = default;
  /// Orders each pair and sorts; throws InvalidInput on out-of-range pairs.
  FaceDelta(Int m, std::vector<std::pair<Int, Int>> pairs);

  bool contains(Int i, Int j) const;
  std::string str() const;

  friend bool operator==(const FaceDelta&, const FaceDelta&) = default;
  friend auto operator<=>(const FaceDelta& a, const FaceDelta& b) { return a.pairs <=> b.pairs; }
};

using Quadruple = std::array<Int, 4>;

/// (i, j) is in the result iff h_i + h_j = h_{(i+j) mod m} for the Apéry set
/// at m. Throws InvalidBase when m is not in H.
FaceDelta delta_of(const NumericalSemigroup& h, Int m);

/// Residues 1..m-1 that are not (i + j) mod m for any pair of the delta.
std::vector<Int> generator_classes(const FaceDelta& delta);

/// The four generator classes of a multiplicity-9 delta, when there are four.
std::optional<Quadruple> quadruple_of(const FaceDelta& delta);

bool satisfies_R1_R4(const FaceDelta& delta, const Quadruple& quad);
/// Numbers (5..9) of the violated lemma rules; empty when all hold.
std::vector<int> violated_R5_R9(const FaceDelta& delta);
inline bool satisfies_R5_R9(const FaceDelta& delta) { return violated_R5_R9(delta).empty(); }

/// Every delta over pairs allowed by R1 and R2 that meets R3 and R4, and the
/// lemma rules when `apply_lemma_rules` is set. Sorted lexicographically.
std::vector<FaceDelta> enumerate_deltas(const Quadruple& quad, bool apply_lemma_rules);

/// Multiplication of every index by sigma mod m, re-sorted. Throws
/// InvalidAutomorphism unless sigma is a unit mod m in [1, m-1].
Quadruple act(Int sigma, const Quadruple& quad, Int m = 9);
FaceDelta act(Int sigma, const FaceDelta& delta);

/// The units of Z/9Z in table order.
inline constexpr std::array<Int, 6> kUnits9{1, 2, 4, 5, 7, 8};

/// Representatives of the Aut(Z/9Z) orbits of quadruples, in table order.
const std::vector<Quadruple>& representative_quadruples();

struct FaceCatalogEntry {
  int id = 0;           // i for F_i
  FaceDelta delta;
  Int sigma = 1;        // delta = act(sigma, delta of F_source)
  int source = 0;       // 1..6
};

/// The 24 faces whose interiors carry nontrivial semidualizing modules.
/// Validated on first use; an inconsistency throws CorruptCatalog.
const std::vector<FaceCatalogEntry>& face_catalog();

/// Id of the catalog face with exactly this delta.
std::optional<int> catalog_face_of(const FaceDelta& delta);

/// Row k is act(sigma, representative k) for sigma in kUnits9.
std::vector<std::array<Quadruple, 6>> quadruple_orbit_table();

/// Entry [s][f] is the catalog id of act(kUnits9[s], F_{f+1}).
std::array<std::array<int, 6>, 6> face_orbit_table();

/// First multiplicity-9 semigroup, in lexicographic order of Kunz
/// coordinates in [1, coordinate_cap], whose delta is exactly `delta`.
std::optional<NumericalSemigroup> sample_for_delta(const FaceDelta& delta, Int coordinate_cap = 5);

}  // namespace nsgr
