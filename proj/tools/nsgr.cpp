#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsgr/error.hpp"
#include "nsgr/reproduce.hpp"
#include "nsgr/serialize.hpp"

using namespace nsgr;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kMismatch = 2, kCap = 3 };

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  return os.str();
}

int cmd_analyze(const std::vector<Int>& gens, bool json) {
  const auto h = std::make_shared<const NumericalSemigroup>(gens);
  const Int m = h->multiplicity();
  const bool kunz = m >= 3;
  const std::optional<KunzPoint> kp = kunz ? std::optional(kunz_coordinates(*h, m)) : std::nullopt;
  const std::optional<FaceDelta> delta = kunz ? std::optional(delta_of(*h, m)) : std::nullopt;
  const MonomialIdeal k = canonical_ideal(h);
  const auto pf = pseudo_frobenius(*h);
  const Int type = cm_type(*h);
  if (json) {
    emit(Json{{"generators", h->generators()},
              {"multiplicity", m},
              {"embedding_dimension", h->embedding_dimension()},
              {"frobenius", h->frobenius()},
              {"pf", pf},
              {"type", type},
              {"apery", to_json(apery(*h, m))},
              {"kunz", kp ? to_json(*kp) : Json(nullptr)},
              {"delta", delta ? to_json(*delta) : Json(nullptr)},
              {"canonical", to_json(k)},
              {"canonical_pretty", k.pretty()}});
    return kOk;
  }
  std::cout << "semigroup <" << join(h->generators()) << ">\n"
            << "multiplicity " << m << "\n"
            << "embedding dimension " << h->embedding_dimension() << "\n"
            << "frobenius " << h->frobenius() << "\n"
            << "pseudo-frobenius {" << join(pf) << "}\n"
            << "type " << type << (type == 1 ? " (Gorenstein)" : "") << "\n";
  if (kunz) std::cout << "kunz coordinates (" << join(kp->mu) << ")\n" << "delta " << delta->str() << "\n";
  std::cout << "canonical ideal K = " << k.pretty() << "\n";
  return kOk;
}

int cmd_sdz_search(const std::vector<Int>& gens) {
  const auto found = search_nontrivial(NumericalSemigroup(gens));
  for (const auto& r : found) {
    Json j = to_json(r);
    j["pretty"] = r.ideal.pretty();
    emit(j);
  }
  emit(Json{{"generators", NumericalSemigroup(gens).generators()}, {"certified", found.size()}});
  return kOk;
}

int cmd_sdz_certify(const std::vector<Int>& gens, const std::vector<Int>& ideal) {
  const MonomialIdeal i(NumericalSemigroup(gens), ideal);
  const auto r = certify_semidualizing(i);
  Json j = to_json(r);
  j["pretty"] = r.ideal.pretty();
  j["trivial"] = to_string(is_trivial(i));
  emit(j);
  return kOk;
}

int cmd_classify9(const std::vector<Int>& gens) {
  emit(to_json(classify_mult9(NumericalSemigroup(gens))));
  return kOk;
}

int cmd_faces(const std::vector<Int>& quad, bool filter) {
  if (quad.size() != 4) throw Error(ErrorCode::InvalidInput, "--quad needs four classes");
  const Quadruple q{quad[0], quad[1], quad[2], quad[3]};
  const auto deltas = enumerate_deltas(q, filter);
  for (const auto& d : deltas) {
    Json j = to_json(d);
    j["delta"] = d.str();
    if (auto f = catalog_face_of(d)) j["face"] = "F_" + std::to_string(*f);
    emit(j);
  }
  emit(Json{{"quad", quad}, {"filtered", filter}, {"count", deltas.size()}});
  return kOk;
}

int cmd_burch(const std::vector<Int>& gens, bool dump_kernel) {
  const NumericalSemigroup h(gens);
  Json j = to_json(burch_report(h));
  j["generators"] = h.generators();
  emit(j);
  if (dump_kernel)
    for (const auto& e : kernel_triples(defining_ideal_truncated(h)))
      emit(Json{{"row", e.row}, {"monomial", e.monomial}, {"column", e.column}, {"value", e.value}});
  return kOk;
}

int cmd_glue(const std::vector<Int>& a_gens, const std::vector<Int>& b_gens, Int a, Int b,
             const std::vector<Int>& i1, const std::vector<Int>& i2) {
  const GluingSpec spec{NumericalSemigroup(a_gens), NumericalSemigroup(b_gens), a, b};
  validate(spec);
  const NumericalSemigroup glued = glue(spec);
  Json j{{"generators", glued.generators()},
         {"frobenius", glued_frobenius(spec)},
         {"pf", glued_pf(spec)},
         {"canonical", to_json(glued_canonical(spec))}};
  if (!i1.empty()) {
    const auto t = transfer_report(spec, i1, i2.empty() ? std::vector<Int>{0} : i2);
    j["transferred_ideal"] = to_json(t.ideal);
    j["transferred_pretty"] = t.ideal.pretty();
    j["transferred_trivial"] = to_string(t.tag);
  } else {
    j["transferred_ideal"] = nullptr;
  }
  if (spec.B.generators() == std::vector<Int>{1}) j["presentation_relation"] = to_json(presentation_relation(spec));
  else j["presentation_relation"] = nullptr;
  emit(j);
  return kOk;
}

int cmd_construct(Int a) {
  const Construction c = construct_for_multiplicity(a);
  emit(Json{{"multiplicity", a},
            {"base", c.base_name},
            {"b", c.spec.b},
            {"generators", c.glued.generators()},
            {"canonical", c.canonical.pretty()},
            {"ideal", to_json(c.transfer.ideal)},
            {"ideal_pretty", c.transfer.ideal.pretty()},
            {"trivial", to_string(c.transfer.tag)},
            {"hom_is_ring", c.transfer.hom_is_ring},
            {"certificate", to_string(c.transfer.certificate.verdict)}});
  return kOk;
}

int cmd_reproduce(const std::string& target, Int cap) {
  const auto report = reproduce(target, cap);
  for (const auto& row : report.rows)
    if (!row.match)
      emit(Json{{"label", row.label}, {"expected", row.expected}, {"computed", row.computed}, {"match", false}});
  emit(report.summary());
  return report.ok() ? kOk : kMismatch;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::CapExceeded:
    case ErrorCode::Overflow: return kCap;
    case ErrorCode::CorruptCatalog: return kMismatch;
    default: return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semidualizing modules over numerical semigroup rings"};
  app.require_subcommand(1);

  std::vector<Int> gens, ideal, quad, a_gens, b_gens, i1, i2;
  bool json = false, filter = false, dump_kernel = false;
  Int a = 0, b = 0, multiplicity = 0, cap = 30;
  std::string target;

  auto* analyze = app.add_subcommand("analyze", "Invariants, Kunz data and canonical ideal");
  analyze->add_option("--gens", gens, "Generators, comma separated")->required()->delimiter(',');
  analyze->add_flag("--json", json, "Machine output");

  auto* sdz = app.add_subcommand("sdz", "Semidualizing certificates");
  sdz->require_subcommand(1);
  auto* search = sdz->add_subcommand("search", "Certified nontrivial ideals (1, t^d)");
  search->add_option("--gens", gens)->required()->delimiter(',');
  auto* certify = sdz->add_subcommand("certify", "Run the certificate chain on one ideal");
  certify->add_option("--gens", gens)->required()->delimiter(',');
  certify->add_option("--ideal", ideal, "Exponents, e.g. 0,2")->required()->delimiter(',');

  auto* classify = app.add_subcommand("classify9", "Multiplicity-9 classification");
  classify->add_option("--gens", gens)->required()->delimiter(',');

  auto* faces = app.add_subcommand("faces", "Kunz face combinatorics");
  faces->require_subcommand(1);
  auto* enumerate = faces->add_subcommand("enumerate", "Deltas for a generator-class quadruple");
  enumerate->add_option("--quad", quad)->required()->delimiter(',');
  enumerate->add_flag("--filter", filter, "Apply the additional admissibility rules");

  auto* burch = app.add_subcommand("burch", "Burch check of the defining ideal");
  burch->add_option("--gens", gens)->required()->delimiter(',');
  burch->add_flag("--dump-kernel", dump_kernel, "Print the kernel basis as sparse triples");

  auto* gluing = app.add_subcommand("glue", "Glue two semigroups");
  gluing->add_option("--a-gens", a_gens)->required()->delimiter(',');
  gluing->add_option("--b-gens", b_gens)->required()->delimiter(',');
  gluing->add_option("--a", a)->required();
  gluing->add_option("--b", b)->required();
  gluing->add_option("--i1", i1, "Ideal of the first factor to transfer")->delimiter(',');
  gluing->add_option("--i2", i2, "Ideal of the second factor (default R)")->delimiter(',');

  auto* construct = app.add_subcommand("construct", "Nontrivial example of a given multiplicity");
  construct->add_option("--multiplicity", multiplicity)->required();

  auto* repro = app.add_subcommand("reproduce", "Compare computed tables with the embedded fixtures");
  repro->add_option("target", target)->required()->check(CLI::IsMember(reproduction_targets()));
  repro->add_option("--frobenius-cap", cap, "Frobenius bound for the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(gens, json);
    if (*search) return cmd_sdz_search(gens);
    if (*certify) return cmd_sdz_certify(gens, ideal);
    if (*classify) return cmd_classify9(gens);
    if (*enumerate) return cmd_faces(quad, filter);
    if (*burch) return cmd_burch(gens, dump_kernel);
    if (*gluing) return cmd_glue(a_gens, b_gens, a, b, i1, i2);
    if (*construct) return cmd_construct(multiplicity);
    if (*repro) return cmd_reproduce(target, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kInvalid;
}
