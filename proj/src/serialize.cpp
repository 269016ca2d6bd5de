#include "nsgr/serialize.hpp"

#include "nsgr/error.hpp"

namespace nsgr {
namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json to_json(const NumericalSemigroup& h) { return Json{{"generators", h.generators()}}; }

Json to_json(const AperySet& ap) { return Json{{"base", ap.base}, {"elements", ap.elements}}; }

Json to_json(const KunzPoint& p) { return Json{{"m", p.m}, {"mu", p.mu}}; }

Json to_json(const MonomialIdeal& i) {
  return Json{{"ambient", to_json(i.ambient())}, {"gens", i.gens()}, {"shift", i.shift()}};
}

Json to_json(const FaceDelta& d) {
  Json pairs = Json::array();
  for (auto [i, j] : d.pairs) pairs.push_back({i, j});
  return Json{{"m", d.m}, {"pairs", pairs}};
}

Json to_json(const CertificateReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"name", s.name}, {"pass", s.pass}};
    step["lhs"] = s.lhs ? to_json(*s.lhs) : Json(nullptr);
    step["rhs"] = s.rhs ? to_json(*s.rhs) : Json(nullptr);
    step["note"] = s.note;
    steps.push_back(std::move(step));
  }
  Json out{{"ideal", to_json(r.ideal)}, {"steps", steps}, {"verdict", to_string(r.verdict)}};
  if (r.verdict == Verdict::Failed) out["failed_step"] = r.failed_step;
  if (r.verdict == Verdict::Inconclusive) out["reason"] = r.reason;
  return out;
}

Json to_json(const ClassificationVerdict& v) {
  Json out{{"verdict", v.str()}};
  using Kind = ClassificationVerdict::Kind;
  switch (v.kind) {
    case Kind::NontrivialExists: out["kind"] = "NontrivialExists"; out["face"] = "F_" + std::to_string(v.face); break;
    case Kind::OnlyTrivial:
      out["kind"] = "OnlyTrivial";
      out["reason"] = v.reason == ClassificationVerdict::Reason::BurchCertificate ? "BurchCertificate" : "NotInFaceCatalog";
      break;
    case Kind::OutOfScope: out["kind"] = "OutOfScope"; break;
  }
  if (v.kind != Kind::OutOfScope) out["delta"] = to_json(v.delta);
  return out;
}

Json to_json(const BurchReport& r) {
  return Json{{"burch", r.burch},         {"order", r.order},           {"ambient_dim", r.ambient_dim},
              {"kernel_dim", r.kernel_dim}, {"m_ideal_dim", r.m_ideal_dim}, {"m_colon_dim", r.m_colon_dim}};
}

Json to_json(const PresentationRelation& p) { return Json{{"b", p.b}, {"c", p.c}, {"relation", p.str()}}; }

NumericalSemigroup semigroup_from_json(const Json& j) {
  return guarded("semigroup", [&] { return NumericalSemigroup(j.at("generators").get<std::vector<Int>>()); });
}

MonomialIdeal ideal_from_json(const Json& j) {
  return guarded("ideal", [&] {
    auto h = std::make_shared<const NumericalSemigroup>(semigroup_from_json(j.at("ambient")));
    const Int shift = j.value("shift", Int{0});
    auto gens = j.at("gens").get<std::vector<Int>>();
    for (Int& g : gens) g = checked_add(g, shift);
    return MonomialIdeal(std::move(h), std::move(gens));
  });
}

FaceDelta delta_from_json(const Json& j) {
  return guarded("delta", [&] {
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<Int>(), p.at(1).get<Int>());
    return FaceDelta(j.value("m", Int{9}), std::move(pairs));
  });
}

}  // namespace nsgr
