// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "nsgr/burch.hpp"
#include "nsgr/fixtures.hpp"
#include "nsgr/gluing.hpp"
#include "nsgr/kunz_faces.hpp"
#include "nsgr/reproduce.hpp"
#include "nsgr/sdz.hpp"
#include "oracles.hpp"

using namespace nsgr;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitExample = 1.0;
constexpr double kLimitSamples = 5.0;  // five samples, 1 s each
constexpr double kLimitOnlyTrivial = 5.0;
constexpr double kLimitBurchTable = 300.0;
constexpr double kLimitOrbits = 60.0;
constexpr double kLimitEnumeration = 60.0;
constexpr double kLimitGluing = 30.0;
constexpr double kLimitProperties = 900.0;
constexpr double kLimitConstruct = 30.0;

constexpr std::size_t kExpectedUnfiltered = 127;
constexpr std::size_t kExpectedFiltered = 82;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else detail += "; " + what;
    pass = false;
  }
};

std::string exps(const std::vector<Int>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ']';
  return s.str();
}

// Checks every identity of a worked example and its certificate.
void check_worked(const fixtures::WorkedExample& ex, Outcome& out) {
  const auto h = std::make_shared<const NumericalSemigroup>(ex.generators);
  const MonomialIdeal r = MonomialIdeal::ring(h);
  const MonomialIdeal i(h, {0, ex.d});
  const MonomialIdeal id = dual(i);
  const std::map<std::string, MonomialIdeal> computed{
      {"K", canonical_ideal(h)},
      {"I_dual", id},
      {"R:I", colon(r, i)},
      {"I_dual:I", colon(id, i)},
      {"(R:I):I_dual", colon(colon(r, i), id)},
      {"R:I_dual", colon(r, id)},
  };
  for (const auto& identity : ex.identities) {
    const auto it = computed.find(identity.name);
    if (it == computed.end()) {
      out.require(false, ex.name + ": unknown identity " + identity.name);
      continue;
    }
    out.require(it->second.exponents() == identity.exponents,
                ex.name + " " + identity.name + " = " + exps(it->second.exponents()) + ", expected " +
                    exps(identity.exponents));
  }
  out.require(equals(colon(colon(r, i), id), multiply(colon(r, id), colon(r, i))),
              ex.name + ": (R:I):I_dual != (R:I_dual)(R:I)");
  const auto [p, q, g3] = ex.ring_colon_triple;
  out.require(equals(colon_in_ring(MonomialIdeal(h, {p, q}), g3), colon(r, i)),
              ex.name + ": ring colon triple does not give R:I");
  const auto cert = certify_semidualizing(i);
  out.require(cert.verdict == Verdict::Certified,
              ex.name + ": certificate " + std::string(to_string(cert.verdict)));
}

const fixtures::WorkedExample& worked(const std::string& name) {
  for (const auto& ex : fixtures::worked_examples())
    if (ex.name == name) return ex;
  throw Error(ErrorCode::CorruptCatalog, "no worked example " + name);
}

Outcome criterion1() {
  Outcome out;
  const auto& ex = worked("H1");
  check_worked(ex, out);
  const MonomialIdeal i(NumericalSemigroup(ex.generators), {0, 1});
  out.require(canonical_ideal(i.ambient_ptr()).pretty() == "(1, t, t^3, t^4)", "K printed form");
  out.require(dual(i).pretty() == "(1, t^3)", "I_dual printed form");
  return out;
}

Outcome criterion2() {
  Outcome out;
  check_worked(worked("no.100"), out);
  check_worked(worked("no.103"), out);
  // Samples (1), (2), (4): no.15, no.97, no.102.
  const std::vector<std::pair<std::vector<Int>, int>> samples{
      {{9, 12, 15, 19, 20}, 1}, {{9, 12, 15, 26, 28}, 3}, {{9, 12, 15, 17, 19}, 5}};
  for (const auto& [gens, face] : samples) {
    const auto v = classify_mult9(NumericalSemigroup(gens));
    out.require(v.kind == ClassificationVerdict::Kind::NontrivialExists && v.face == face,
                "<" + exps(gens) + "> classified " + v.str() + ", expected F_" + std::to_string(face));
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  const NumericalSemigroup h{9, 19, 20, 25, 31};
  out.require(search_nontrivial(h).empty(), "search found a nontrivial module");
  out.require(!is_burch(h), "is_burch returned true");
  const auto v = classify_mult9(h);
  out.require(v.kind == ClassificationVerdict::Kind::OnlyTrivial, "classified " + v.str());
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::size_t matched = 0;
  for (const auto& row : fixtures::burch_table()) {
    const bool burch = is_burch(NumericalSemigroup(row.generators));
    if (burch == row.burch) ++matched;
    else out.require(false, "no." + std::to_string(row.no) + " computed " + (burch ? "Yes" : "No"));
  }
  out.require(matched == 82, std::to_string(matched) + "/82 rows match");
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto quads = quadruple_orbit_table();
  const auto& printed = fixtures::quadruple_orbits();
  out.require(quads.size() == 14 && printed.size() == 14, "expected 14 quadruple rows");
  for (std::size_t k = 0; k < std::min(quads.size(), printed.size()); ++k)
    for (std::size_t s = 0; s < 6; ++s) {
      if (quads[k][s] == printed[k][s]) continue;
      const std::vector<Int> c(quads[k][s].begin(), quads[k][s].end());
      const std::vector<Int> e(printed[k][s].begin(), printed[k][s].end());
      const std::vector<Int> row(quads[k][0].begin(), quads[k][0].end());
      out.require(false, "quadruple orbit row " + exps(row) + " sigma=" + std::to_string(kUnits9[s]) + ": computed " +
                             exps(c) + ", printed " + exps(e));
    }
  const auto grid = face_orbit_table();
  const auto& printed_grid = fixtures::face_orbits();
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t f = 0; f < 6; ++f)
      out.require(grid[s][f] == printed_grid[s][f],
                  "face orbit sigma=" + std::to_string(kUnits9[s]) + " F_" + std::to_string(f + 1) + ": computed F_" +
                      std::to_string(grid[s][f]) + ", printed F_" + std::to_string(printed_grid[s][f]));
  // sigma = 8 is index 5, sigma = 5 is index 3.
  out.require(grid[5][2] == 3 && grid[5][5] == 6, "sigma=8 does not fix F_3 and F_6");
  std::set<int> sigma5;
  for (std::size_t f = 0; f < 6; ++f) sigma5.insert(grid[3][f]);
  out.require(sigma5.count(15) && sigma5.count(18), "sigma=5 does not reach F_15 and F_18");
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::size_t unfiltered = 0, filtered = 0;
  for (const auto& q : representative_quadruples()) {
    unfiltered += enumerate_deltas(q, false).size();
    filtered += enumerate_deltas(q, true).size();
  }
  out.require(unfiltered == kExpectedUnfiltered,
              "R1-R4 count " + std::to_string(unfiltered) + ", expected " + std::to_string(kExpectedUnfiltered));
  out.require(filtered == kExpectedFiltered,
              "R1-R9 count " + std::to_string(filtered) + ", expected " + std::to_string(kExpectedFiltered));
  for (const auto& row : fixtures::burch_table()) {
    const auto d = delta_of(NumericalSemigroup(row.generators), 9);
    const auto q = quadruple_of(d);
    bool found = false;
    if (q)
      for (const auto& s : enumerate_deltas(*q, true)) found = found || s == d;
    out.require(found, "no." + std::to_string(row.no) + " delta " + d.str() + " not among the survivors");
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto& rows = fixtures::gluing_table();
  out.require(rows.size() == 9, "expected 9 rows");
  for (const auto& row : rows) {
    const auto c = construct_for_multiplicity(row.multiplicity);
    const std::string tag = "a=" + std::to_string(row.multiplicity);
    out.require(c.glued.generators() == row.generators, tag + " generators " + exps(c.glued.generators()));
    out.require(c.canonical.exponents() == row.canonical, tag + " canonical " + exps(c.canonical.exponents()));
    out.require(c.transfer.ideal.exponents() == row.ideal, tag + " ideal " + exps(c.transfer.ideal.exponents()));
    out.require(c.transfer.hom_is_ring, tag + " hom_is_ring false");
    out.require(c.transfer.ideal.mu() == 2, tag + " mu != 2");
    out.require(c.transfer.tag == TrivialTag::Neither, tag + " ideal is trivial");
    out.require(equals(glued_canonical(c.spec), canonical_ideal(c.glued)), tag + " glued canonical differs");
  }
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Outcome criterion8() {
  Outcome out;
  std::size_t certified = 0;
  for (Int m = 2; m <= 8; ++m)
    for (const auto& h : enumerate_semigroups(m, 30)) certified += search_nontrivial(h).size();
  out.require(certified == 0, "(a) " + std::to_string(certified) + " certified modules at multiplicity <= 8");

  std::size_t prime_hits = 0;
  for (Int m = 3; m <= 9; ++m)
    for (const auto& h : enumerate_semigroups(m, 30))
      if (is_prime(cm_type(h))) prime_hits += search_nontrivial(h).size();
  out.require(prime_hits == 0, "(b) " + std::to_string(prime_hits) + " certified modules of prime type");

  for (const auto& row : fixtures::burch_table())
    if (row.burch)
      out.require(search_nontrivial(NumericalSemigroup(row.generators)).empty(),
                  "(c) no." + std::to_string(row.no) + " is Burch with a nontrivial module");

  const auto sweep = soundness_sweep_mult9(30);
  out.require(sweep.certified > 0 && sweep.outside_catalog.empty(),
              "(d) " + std::to_string(sweep.outside_catalog.size()) + " certified semigroups outside the catalog");

  std::mt19937_64 rng(2024);
  std::size_t failures = 0, ideals = 0;
  std::uniform_int_distribution<Int> exp(-6, 29);
  for (int s = 0; s < 25; ++s) {
    const auto h = std::make_shared<const NumericalSemigroup>(oracle::random_semigroup(rng, 3, 9, 3, 12));
    if (!(semigroup_from_kunz(kunz_coordinates(*h, h->multiplicity())) == *h)) ++failures;
    const MonomialIdeal k = canonical_ideal(h);
    std::vector<MonomialIdeal> pool;
    for (int t = 0; t < 20; ++t) {
      std::vector<Int> e;
      const int n = 1 + static_cast<int>(rng() % 3);
      for (int u = 0; u < n; ++u) e.push_back(exp(rng));
      pool.emplace_back(h, e);
    }
    for (std::size_t t = 0; t < pool.size(); ++t) {
      ++ideals;
      const auto& i = pool[t];
      const auto& j = pool[(t + 1) % pool.size()];
      const auto& l = pool[(t + 2) % pool.size()];
      if (!equals(colon(k, colon(k, i)), i)) ++failures;
      if (!equals(colon(i, multiply(j, l)), colon(colon(i, j), l))) ++failures;
      if (!is_subset(multiply(colon(i, j), j), i)) ++failures;
    }
  }
  out.require(ideals == 500 && failures == 0, "(e) " + std::to_string(failures) + " failures over " +
                                                  std::to_string(ideals) + " ideals");
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::map<Int, const fixtures::GluingRow*> table;
  for (const auto& row : fixtures::gluing_table()) table[row.multiplicity] = &row;
  for (Int a = 10; a <= 18; ++a) {
    const auto c = construct_for_multiplicity(a);
    const std::string tag = "a=" + std::to_string(a);
    out.require(c.glued.multiplicity() == a, tag + " multiplicity " + std::to_string(c.glued.multiplicity()));
    out.require(c.transfer.ideal.mu() == 2, tag + " mu != 2");
    out.require(c.transfer.tag == TrivialTag::Neither, tag + " ideal is trivial");
    out.require(c.transfer.hom_is_ring, tag + " hom_is_ring false");
    if (const auto it = table.find(a); it != table.end())
      out.require(c.glued.generators() == it->second->generators && c.transfer.ideal.exponents() == it->second->ideal,
                  tag + " differs from the table");
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example over <9,10,11,12,15>", kLimitExample, criterion1},
      {2, "multiplicity-9 samples", kLimitSamples, criterion2},
      {3, "no nontrivial module for <9,19,20,25,31>", kLimitOnlyTrivial, criterion3},
      {4, "Burch column of the 82-row table", kLimitBurchTable, criterion4},
      {5, "quadruple and face orbit tables", kLimitOrbits, criterion5},
      {6, "face enumeration counts 127 / 82", kLimitEnumeration, criterion6},
      {7, "gluing table", kLimitGluing, criterion7},
      {8, "property sweeps", kLimitProperties, criterion8},
      {9, "constructor for multiplicities 10..18", kLimitConstruct, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs <= %.0fs", seconds, c.limit);
    out.require(seconds <= c.limit, std::string("too slow: ") + timing);
    std::printf("%s %d %s (%s)%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.title, timing,
                out.pass ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
