#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsgr/checked.hpp"
#include "nsgr/kunz_faces.hpp"

namespace nsgr::fixtures {

/// Raw embedded documents and their FNV-1a checksums.
struct Document {
  std::string_view name;
  std::string_view text;
  std::uint64_t checksum;
};

std::uint64_t fnv1a(std::string_view text) noexcept;

/// All embedded documents. Accessors below verify the checksum on first use
/// and throw CorruptCatalog on a mismatch.
const std::vector<Document>& documents();

/// Quadruple orbit table as printed, one row per representative, columns in
/// the order 1, 2, 4, 5, 7, 8.
const std::vector<std::array<Quadruple, 6>>& quadruple_orbits();

struct BurchRow {
  int no = 0;
  std::vector<Int> generators;
  bool burch = false;
};
const std::vector<BurchRow>& burch_table();

/// Face-orbit grid: [sigma index][source face index] -> catalog id.
const std::array<std::array<int, 6>, 6>& face_orbits();

struct FaceRow {
  int id = 0;
  std::vector<std::pair<Int, Int>> pairs;
  int sample_no = 0;  // table row whose delta this is, 0 when none
};
const std::vector<FaceRow>& faces();

/// Base semigroups of the gluing construction with their canonical and
/// semidualizing ideals (exponents).
struct GluingBase {
  std::string name;
  std::vector<Int> generators;
  std::vector<Int> canonical;
  std::vector<Int> ideal;
};
const std::vector<GluingBase>& gluing_bases();

struct GluingRow {
  Int multiplicity = 0;
  std::string base;
  Int b = 0;
  std::vector<Int> generators;
  std::vector<Int> canonical;
  std::vector<Int> ideal;
};
const std::vector<GluingRow>& gluing_table();

/// A named monomial ideal identity checked by the worked examples.
struct IdealIdentity {
  std::string name;
  std::vector<Int> exponents;
};

struct WorkedExample {
  std::string name;
  std::vector<Int> generators;
  Int d = 0;  // I = (1, t^d)
  std::vector<IdealIdentity> identities;
  std::array<Int, 3> ring_colon_triple{};  // (p, q, g3) with (t^p, t^q) :_R t^g3 = R:I
};

/// The full certificate computations: the worked example and the two
/// explicit cases of the multiplicity-9 samples.
const std::vector<WorkedExample>& worked_examples();

struct ClassifiedSample {
  std::string name;
  std::vector<Int> generators;
  int face = 0;  // expected catalog id, 0 for none
};
/// Semigroups with a known classification outcome.
const std::vector<ClassifiedSample>& classified_samples();

}  // namespace nsgr::fixtures
