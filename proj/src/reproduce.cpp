#include "nsgr/reproduce.hpp"

#include <algorithm>

#include "nsgr/error.hpp"
#include "nsgr/fixtures.hpp"

namespace nsgr {
namespace {

Json quad_json(const Quadruple& q) { return Json(std::vector<Int>(q.begin(), q.end())); }

std::string quad_label(const Quadruple& q) {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

void add(ReproductionReport& r, std::string label, Json expected, Json computed) {
  const bool match = expected == computed;
  r.rows.push_back({std::move(label), std::move(expected), std::move(computed), match});
}

ReproductionReport table1() {
  ReproductionReport r{"table1", {}};
  const auto& printed = fixtures::quadruple_orbits();
  const auto computed = quadruple_orbit_table();
  for (std::size_t row = 0; row < printed.size(); ++row)
    for (std::size_t s = 0; s < 6; ++s)
      add(r, quad_label(printed[row][0]) + " sigma=" + std::to_string(kUnits9[s]), quad_json(printed[row][s]),
          quad_json(computed[row][s]));
  return r;
}

ReproductionReport table3() {
  ReproductionReport r{"table3", {}};
  for (const auto& row : fixtures::burch_table()) {
    const NumericalSemigroup h(row.generators);
    add(r, "no." + std::to_string(row.no), row.burch ? "Yes" : "No", is_burch(h) ? "Yes" : "No");
  }
  return r;
}

ReproductionReport table4() {
  ReproductionReport r{"table4", {}};
  const auto& printed = fixtures::face_orbits();
  const auto computed = face_orbit_table();
  const auto& faces = fixtures::faces();
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t f = 0; f < 6; ++f)
      add(r, "sigma=" + std::to_string(kUnits9[s]) + " no." + std::to_string(faces[f].sample_no),
          "F_" + std::to_string(printed[s][f]), "F_" + std::to_string(computed[s][f]));
  return r;
}

ReproductionReport table5() {
  ReproductionReport r{"table5", {}};
  for (const auto& row : fixtures::gluing_table()) {
    const Construction c = construct_for_multiplicity(row.multiplicity);
    const std::string label = "multiplicity " + std::to_string(row.multiplicity);
    add(r, label + " base", Json{{"base", row.base}, {"b", row.b}}, Json{{"base", c.base_name}, {"b", c.spec.b}});
    add(r, label + " generators", Json(row.generators), Json(c.glued.generators()));
    add(r, label + " K_H", Json(row.canonical), Json(c.canonical.exponents()));
    add(r, label + " I", Json(row.ideal), Json(c.transfer.ideal.exponents()));
  }
  return r;
}

void worked_example(ReproductionReport& r, const fixtures::WorkedExample& ex) {
  const auto h = std::make_shared<const NumericalSemigroup>(ex.generators);
  const MonomialIdeal i(h, {0, ex.d});
  const MonomialIdeal ring = MonomialIdeal::ring(h);
  const MonomialIdeal k = canonical_ideal(h);
  const MonomialIdeal i_dual = dual(i);
  const MonomialIdeal r_i = colon(ring, i);
  for (const auto& id : ex.identities) {
    std::vector<Int> got;
    if (id.name == "K") got = k.exponents();
    else if (id.name == "I_dual") got = i_dual.exponents();
    else if (id.name == "R:I") got = r_i.exponents();
    else if (id.name == "I_dual:I") got = colon(i_dual, i).exponents();
    else if (id.name == "(R:I):I_dual") got = colon(r_i, i_dual).exponents();
    else if (id.name == "R:I_dual") got = colon(ring, i_dual).exponents();
    else throw Error(ErrorCode::CorruptCatalog, "unknown identity " + id.name);
    add(r, ex.name + " " + id.name, MonomialIdeal(h, id.exponents).pretty(), MonomialIdeal(h, got).pretty());
  }
  const auto [p, q, g3] = ex.ring_colon_triple;
  add(r, ex.name + " (t^" + std::to_string(p) + ", t^" + std::to_string(q) + "):_R t^" + std::to_string(g3),
      r_i.pretty(), colon_in_ring(MonomialIdeal(h, {p, q}), g3).pretty());
  add(r, ex.name + " (R:I):I_dual = (R:I_dual)(R:I)", true,
      equals(colon(r_i, i_dual), multiply(colon(ring, i_dual), r_i)));
  add(r, ex.name + " (R:I)I_dual = I_dual:I", true, equals(multiply(r_i, i_dual), colon(i_dual, i)));
  add(r, ex.name + " certificate", "Certified", to_string(certify_semidualizing(i).verdict));
}

ReproductionReport example73() {
  ReproductionReport r{"example73", {}};
  worked_example(r, fixtures::worked_examples().at(0));
  return r;
}

ReproductionReport prop45() {
  ReproductionReport r{"prop45", {}};
  const auto& examples = fixtures::worked_examples();
  for (std::size_t k = 1; k < examples.size(); ++k) worked_example(r, examples[k]);
  for (const auto& s : fixtures::classified_samples()) {
    if (s.face == 0 || s.name.rfind("no.", 0) != 0 || s.name == "no.17") continue;
    const auto v = classify_mult9(NumericalSemigroup(s.generators));
    add(r, s.name + " classify9", "NontrivialExists(F_" + std::to_string(s.face) + ")", v.str());
  }
  return r;
}

ReproductionReport theorem46_sweep(Int cap) {
  ReproductionReport r{"theorem46-sweep", {}};
  const SweepResult sweep = soundness_sweep_mult9(cap);
  Json outside = Json::array();
  for (const auto& h : sweep.outside_catalog) outside.push_back(h.generators());
  add(r, "certified semigroups outside the face catalog (" + std::to_string(sweep.certified) + " certified of " +
             std::to_string(sweep.semigroups) + ")",
      Json::array(), outside);
  // Samples whose nontrivial module is an explicit monomial ideal.
  for (const auto& s : fixtures::classified_samples()) {
    if (s.face == 0) continue;
    const NumericalSemigroup h(s.generators);
    const auto found = search_nontrivial(h);
    if (s.name == "no.15" || s.name == "no.97") {
      add(r, s.name + " in catalog", "F_" + std::to_string(s.face),
          "F_" + std::to_string(catalog_face_of(delta_of(h, 9)).value_or(0)));
      continue;
    }
    add(r, s.name + " certified monomial module", true, !found.empty());
  }
  return r;
}

}  // namespace

std::size_t ReproductionReport::matched() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& row) { return row.match; }));
}

Json ReproductionReport::summary() const {
  return Json{{"target", target}, {"rows", rows.size()}, {"matched", matched()}, {"mismatched", mismatched()}};
}

const std::vector<std::string>& reproduction_targets() {
  static const std::vector<std::string> targets{"table1",    "table3", "table4",         "table5",
                                                "example73", "prop45", "theorem46-sweep"};
  return targets;
}

SweepResult soundness_sweep_mult9(Int frobenius_cap) {
  SweepResult out;
  SemigroupEnumerator stream(9, frobenius_cap);
  while (auto h = stream.next()) {
    ++out.semigroups;
    if (search_nontrivial(*h).empty()) continue;
    ++out.certified;
    if (!catalog_face_of(delta_of(*h, 9))) out.outside_catalog.push_back(*h);
  }
  return out;
}

ReproductionReport reproduce(std::string_view target, Int frobenius_cap) {
  if (target == "table1") return table1();
  if (target == "table3") return table3();
  if (target == "table4") return table4();
  if (target == "table5") return table5();
  if (target == "example73") return example73();
  if (target == "prop45") return prop45();
  if (target == "theorem46-sweep") return theorem46_sweep(frobenius_cap);
  throw Error(ErrorCode::InvalidInput, "unknown reproduction target '" + std::string(target) + "'");
}

}  // namespace nsgr
