#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsgr/serialize.hpp"

namespace nsgr {

struct ReproductionRow {
  std::string label;
  Json expected;
  Json computed;
  bool match = false;
};

struct ReproductionReport {
  std::string target;
  std::vector<ReproductionRow> rows;

  std::size_t matched() const;
  std::size_t mismatched() const { return rows.size() - matched(); }
  bool ok() const { return mismatched() == 0; }
  Json summary() const;
};

/// Known targets, in the order they are listed by the CLI.
const std::vector<std::string>& reproduction_targets();

/// Throws InvalidInput for an unknown target. `frobenius_cap` is used by the
/// multiplicity-9 sweep only.
ReproductionReport reproduce(std::string_view target, Int frobenius_cap = 30);

/// Result of scanning every multiplicity-9 semigroup with Frobenius number up
/// to the cap: semigroups with a certified nontrivial ideal, and those among
/// them whose delta is outside the face catalog.
struct SweepResult {
  std::size_t semigroups = 0;
  std::size_t certified = 0;
  std::vector<NumericalSemigroup> outside_catalog;
};

SweepResult soundness_sweep_mult9(Int frobenius_cap);

}  // namespace nsgr
