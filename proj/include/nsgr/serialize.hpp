#pragma once

#include "json.hpp"
#include "nsgr/burch.hpp"
#include "nsgr/gluing.hpp"
#include "nsgr/ideal.hpp"
#include "nsgr/kunz_faces.hpp"
#include "nsgr/sdz.hpp"
#include "nsgr/semigroup.hpp"

namespace nsgr {

using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& h);
Json to_json(const AperySet& ap);
Json to_json(const KunzPoint& p);
/// {"ambient": {...}, "gens": [...], "shift": s}
Json to_json(const MonomialIdeal& i);
Json to_json(const FaceDelta& d);
Json to_json(const CertificateReport& r);
Json to_json(const ClassificationVerdict& v);
Json to_json(const BurchReport& r);
Json to_json(const PresentationRelation& p);

NumericalSemigroup semigroup_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
FaceDelta delta_from_json(const Json& j);

}  // namespace nsgr
