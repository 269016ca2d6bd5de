#pragma once

#include <cstdint>

namespace nsgr {

/// Resource caps shared by the enumerators and the truncated linear algebra.
///
/// Defaults can be overridden with the NSGR_CAP environment variable, either a
/// single integer applied to every cap or a comma separated list such as
/// `monomials=200000,points=1000000000,residues=10000000`.
struct ResourceLimits {
  /// Monomials in a truncated polynomial algebra.
  std::int64_t monomials = 100000;
  /// Lattice points in the Kunz box scanned by an enumeration.
  std::int64_t points = 1000000000;
  /// Size of any residue table (Apéry sets, value-set windows).
  std::int64_t residues = 10000000;

  static ResourceLimits from_environment();
};

/// Process-wide limits, read from the environment once.
const ResourceLimits& resource_limits();

}  // namespace nsgr
