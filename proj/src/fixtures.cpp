#include "nsgr/fixtures.hpp"

#include <map>
#include <mutex>

#include "json.hpp"
#include "nsgr/error.hpp"

namespace nsgr::fixtures {
namespace {

using nlohmann::json;

// Quadruple orbits exactly as printed, including the misprinted cell in row
// (1,2,6,7) under sigma = 7.
constexpr std::string_view kQuadrupleOrbits = R"json([
  [[1,2,3,4],[2,4,6,8],[3,4,7,8],[1,2,5,6],[1,3,5,7],[5,6,7,8]],
  [[1,2,3,5],[1,2,4,6],[2,3,4,8],[1,5,6,7],[3,5,7,8],[4,6,7,8]],
  [[1,2,3,6],[2,3,4,6],[3,4,6,8],[1,3,5,6],[3,5,6,7],[3,6,7,8]],
  [[1,2,3,7],[2,4,5,6],[1,3,4,8],[1,5,6,8],[3,4,5,7],[2,6,7,8]],
  [[1,2,3,8],[2,4,6,7],[3,4,5,8],[1,4,5,6],[2,3,5,7],[1,6,7,8]],
  [[1,2,4,5],[1,2,4,8],[2,4,7,8],[1,2,5,7],[1,5,7,8],[4,5,7,8]],
  [[1,2,4,7],[2,4,5,8],[1,4,7,8],[1,2,5,8],[1,4,5,7],[2,5,7,8]],
  [[1,2,6,7],[2,3,4,5],[1,4,6,8],[1,3,5,8],[2,5,6,7],[2,3,7,8]],
  [[1,2,6,8],[2,3,4,7],[4,5,6,8],[1,3,4,5],[2,5,6,7],[1,3,7,8]],
  [[1,2,7,8],[2,4,5,7],[1,4,5,8],[1,4,5,8],[2,4,5,7],[1,2,7,8]],
  [[1,3,4,6],[2,3,6,8],[3,4,6,7],[2,3,5,6],[1,3,6,7],[3,5,6,8]],
  [[1,3,4,7],[2,5,6,8],[1,3,4,7],[2,5,6,8],[1,3,4,7],[2,5,6,8]],
  [[1,3,6,8],[2,3,6,7],[3,4,5,6],[3,4,5,6],[2,3,6,7],[1,3,6,8]],
  [[1,4,6,7],[2,3,5,8],[1,4,6,7],[2,3,5,8],[1,4,6,7],[2,3,5,8]]
])json";

constexpr std::string_view kBurchTable = R"json([
    {"no": 1, "generators": [9, 13, 19, 20, 21], "burch": true},
    {"no": 2, "generators": [9, 12, 13, 19, 29], "burch": true},
    {"no": 3, "generators": [9, 11, 13, 19, 21], "burch": true},
    {"no": 4, "generators": [9, 12, 13, 19, 20], "burch": true},
    {"no": 5, "generators": [9, 13, 19, 21, 29], "burch": true},
    {"no": 6, "generators": [9, 10, 11, 12, 13], "burch": true},
    {"no": 7, "generators": [9, 14, 19, 21, 29], "burch": true},
    {"no": 8, "generators": [9, 12, 14, 19, 20], "burch": true},
    {"no": 9, "generators": [9, 14, 19, 20, 30], "burch": true},
    {"no": 10, "generators": [9, 19, 21, 23, 29], "burch": true},
    {"no": 11, "generators": [9, 14, 19, 20, 21], "burch": true},
    {"no": 12, "generators": [9, 12, 20, 23, 28], "burch": true},
    {"no": 13, "generators": [9, 23, 29, 30, 37], "burch": true},
    {"no": 14, "generators": [9, 10, 11, 12, 14], "burch": true},
    {"no": 15, "generators": [9, 12, 15, 19, 20], "burch": false},
    {"no": 16, "generators": [9, 11, 15, 19, 21], "burch": true},
    {"no": 17, "generators": [9, 10, 11, 12, 15], "burch": false},
    {"no": 18, "generators": [9, 12, 19, 25, 29], "burch": true},
    {"no": 19, "generators": [9, 20, 21, 25, 28], "burch": true},
    {"no": 20, "generators": [9, 16, 20, 21, 28], "burch": true},
    {"no": 21, "generators": [9, 12, 16, 19, 20], "burch": true},
    {"no": 22, "generators": [9, 10, 11, 12, 16], "burch": true},
    {"no": 23, "generators": [9, 16, 19, 20, 21], "burch": true},
    {"no": 24, "generators": [9, 28, 29, 34, 39], "burch": true},
    {"no": 25, "generators": [9, 21, 25, 29, 37], "burch": true},
    {"no": 26, "generators": [9, 12, 17, 19, 20], "burch": true},
    {"no": 27, "generators": [9, 12, 17, 20, 28], "burch": true},
    {"no": 28, "generators": [9, 14, 19, 20, 22], "burch": true},
    {"no": 29, "generators": [9, 11, 13, 14, 19], "burch": true},
    {"no": 30, "generators": [9, 10, 11, 13, 14], "burch": true},
    {"no": 31, "generators": [9, 19, 20, 31, 34], "burch": true},
    {"no": 32, "generators": [9, 20, 22, 25, 37], "burch": true},
    {"no": 33, "generators": [9, 16, 19, 20, 22], "burch": true},
    {"no": 34, "generators": [9, 10, 11, 13, 16], "burch": true},
    {"no": 35, "generators": [9, 20, 25, 31, 37], "burch": true},
    {"no": 36, "generators": [9, 19, 20, 25, 31], "burch": false},
    {"no": 37, "generators": [9, 11, 13, 16, 19], "burch": true},
    {"no": 39, "generators": [9, 11, 16, 24, 28], "burch": true},
    {"no": 40, "generators": [9, 25, 28, 38, 42], "burch": true},
    {"no": 43, "generators": [9, 11, 16, 19, 24], "burch": true},
    {"no": 45, "generators": [9, 16, 19, 20, 24], "burch": true},
    {"no": 48, "generators": [9, 15, 16, 19, 20], "burch": true},
    {"no": 51, "generators": [9, 11, 15, 16, 19], "burch": true},
    {"no": 52, "generators": [9, 19, 24, 25, 29], "burch": true},
    {"no": 60, "generators": [9, 19, 24, 29, 34], "burch": true},
    {"no": 61, "generators": [9, 19, 20, 24, 26], "burch": true},
    {"no": 62, "generators": [9, 17, 19, 20, 24], "burch": true},
    {"no": 63, "generators": [9, 15, 19, 20, 26], "burch": true},
    {"no": 64, "generators": [9, 19, 26, 29, 33], "burch": true},
    {"no": 65, "generators": [9, 19, 24, 26, 29], "burch": true},
    {"no": 66, "generators": [9, 17, 20, 24, 28], "burch": true},
    {"no": 67, "generators": [9, 15, 17, 19, 20], "burch": true},
    {"no": 68, "generators": [9, 11, 15, 17, 19], "burch": true},
    {"no": 69, "generators": [9, 16, 17, 19, 20], "burch": true},
    {"no": 70, "generators": [9, 10, 12, 13, 15], "burch": true},
    {"no": 71, "generators": [9, 19, 21, 31, 34], "burch": true},
    {"no": 74, "generators": [9, 13, 21, 25, 28], "burch": true},
    {"no": 75, "generators": [9, 16, 21, 28, 31], "burch": true},
    {"no": 76, "generators": [9, 10, 12, 13, 16], "burch": true},
    {"no": 77, "generators": [9, 19, 21, 25, 31], "burch": true},
    {"no": 82, "generators": [9, 12, 13, 16, 19], "burch": true},
    {"no": 83, "generators": [9, 16, 21, 22, 28], "burch": true},
    {"no": 85, "generators": [9, 13, 19, 21, 25], "burch": true},
    {"no": 86, "generators": [9, 12, 16, 19, 22], "burch": true},
    {"no": 95, "generators": [9, 10, 15, 17, 21], "burch": true},
    {"no": 96, "generators": [9, 17, 19, 24, 30], "burch": true},
    {"no": 97, "generators": [9, 12, 15, 26, 28], "burch": false},
    {"no": 98, "generators": [9, 12, 15, 17, 28], "burch": true},
    {"no": 99, "generators": [9, 24, 26, 28, 39], "burch": true},
    {"no": 100, "generators": [9, 12, 15, 19, 26], "burch": false},
    {"no": 101, "generators": [9, 17, 19, 21, 24], "burch": true},
    {"no": 102, "generators": [9, 12, 15, 17, 19], "burch": false},
    {"no": 103, "generators": [9, 15, 17, 19, 21], "burch": false},
    {"no": 104, "generators": [9, 19, 24, 31, 34], "burch": true},
    {"no": 107, "generators": [9, 22, 24, 34, 37], "burch": true},
    {"no": 108, "generators": [9, 24, 25, 37, 40], "burch": true},
    {"no": 109, "generators": [9, 15, 19, 22, 25], "burch": true},
    {"no": 110, "generators": [9, 15, 19, 25, 31], "burch": true},
    {"no": 114, "generators": [9, 13, 15, 19, 25], "burch": true},
    {"no": 115, "generators": [9, 15, 16, 19, 22], "burch": true},
    {"no": 119, "generators": [9, 13, 15, 16, 19], "burch": true},
    {"no": 120, "generators": [9, 15, 16, 22, 28], "burch": true}

])json";

constexpr std::string_view kFaceOrbits = R"json([
  [1, 2, 3, 4, 5, 6],
  [7, 8, 9, 10, 11, 12],
  [13, 14, 15, 16, 17, 18],
  [19, 20, 15, 17, 16, 18],
  [21, 22, 9, 11, 10, 12],
  [23, 24, 3, 5, 4, 6]
])json";

constexpr std::string_view kFaces = R"json([
  {"id": 1, "sample": 15, "pairs": [[1,3],[2,3],[1,6],[2,6]]},
  {"id": 2, "sample": 17, "pairs": [[1,3],[2,2],[2,3],[1,6],[2,6]]},
  {"id": 3, "sample": 97, "pairs": [[3,8],[1,3],[6,8],[1,6]]},
  {"id": 4, "sample": 100, "pairs": [[1,1],[3,8],[1,3],[6,8],[1,6]]},
  {"id": 5, "sample": 102, "pairs": [[3,8],[1,3],[6,8],[1,6],[8,8]]},
  {"id": 6, "sample": 103, "pairs": [[1,1],[3,8],[1,3],[6,8],[1,6],[8,8]]},
  {"id": 7, "pairs": [[4,6],[2,3],[3,4],[2,6]]},
  {"id": 8, "pairs": [[4,6],[2,3],[3,4],[2,6],[4,4]]},
  {"id": 9, "pairs": [[3,7],[6,7],[2,3],[2,6]]},
  {"id": 10, "pairs": [[3,7],[2,2],[6,7],[2,3],[2,6]]},
  {"id": 11, "pairs": [[3,7],[6,7],[2,3],[7,7],[2,6]]},
  {"id": 12, "pairs": [[3,7],[2,2],[6,7],[2,3],[7,7],[2,6]]},
  {"id": 13, "pairs": [[4,6],[3,8],[6,8],[3,4]]},
  {"id": 14, "pairs": [[4,6],[3,8],[6,8],[3,4],[8,8]]},
  {"id": 15, "pairs": [[4,6],[5,6],[3,4],[3,5]]},
  {"id": 16, "pairs": [[4,6],[5,6],[3,4],[3,5],[4,4]]},
  {"id": 17, "pairs": [[4,6],[5,5],[5,6],[3,4],[3,5]]},
  {"id": 18, "pairs": [[4,6],[5,5],[5,6],[3,4],[3,5],[4,4]]},
  {"id": 19, "pairs": [[5,6],[1,3],[1,6],[3,5]]},
  {"id": 20, "pairs": [[1,1],[5,6],[1,3],[1,6],[3,5]]},
  {"id": 21, "pairs": [[3,7],[5,6],[6,7],[3,5]]},
  {"id": 22, "pairs": [[3,7],[5,5],[5,6],[6,7],[3,5]]},
  {"id": 23, "pairs": [[3,7],[3,8],[6,7],[6,8]]},
  {"id": 24, "pairs": [[3,7],[3,8],[6,7],[7,7],[6,8]]}
])json";

constexpr std::string_view kGluingBases = R"json([
  {"name": "H1", "generators": [9,10,11,12,15], "canonical": [0,1,3,4], "ideal": [0,1]},
  {"name": "H2", "generators": [9,11,12,13,15], "canonical": [0,2,3,5], "ideal": [0,2]},
  {"name": "H3", "generators": [9,12,14,15,16], "canonical": [0,2,3,5], "ideal": [0,2]},
  {"name": "H4", "generators": [9,12,15,17,19], "canonical": [0,2,3,5], "ideal": [0,2]}
])json";

constexpr std::string_view kGluingTable = R"json([
  {"multiplicity": 10, "base": "H1", "b": 3, "generators": [10,27,33,36,45], "canonical": [0,3,9,12], "ideal": [0,3]},
  {"multiplicity": 11, "base": "H1", "b": 2, "generators": [11,18,20,24,30], "canonical": [0,2,6,8], "ideal": [0,2]},
  {"multiplicity": 12, "base": "H1", "b": 5, "generators": [12,45,50,55,75], "canonical": [0,5,15,20], "ideal": [0,5]},
  {"multiplicity": 13, "base": "H2", "b": 2, "generators": [13,18,22,24,30], "canonical": [0,4,6,10], "ideal": [0,4]},
  {"multiplicity": 14, "base": "H3", "b": 3, "generators": [14,27,36,45,48], "canonical": [0,6,9,15], "ideal": [0,6]},
  {"multiplicity": 15, "base": "H1", "b": 2, "generators": [15,18,20,22,24], "canonical": [0,2,6,8], "ideal": [0,2]},
  {"multiplicity": 16, "base": "H3", "b": 3, "generators": [16,27,36,42,45], "canonical": [0,6,9,15], "ideal": [0,6]},
  {"multiplicity": 17, "base": "H4", "b": 2, "generators": [17,18,24,30,38], "canonical": [0,4,6,10], "ideal": [0,4]},
  {"multiplicity": 18, "base": "H1", "b": 5, "generators": [18,45,50,55,60,75], "canonical": [0,5,15,20], "ideal": [0,5]}
])json";

constexpr std::string_view kWorkedExamples = R"json([
  {"name": "H1", "generators": [9,10,11,12,15], "d": 1, "triple": [9,10,11],
   "identities": [
     {"name": "K", "exponents": [0,1,3,4]},
     {"name": "I_dual", "exponents": [0,3]},
     {"name": "R:I", "exponents": [9,10,11]},
     {"name": "I_dual:I", "exponents": [9,10,11,12,13,14]},
     {"name": "(R:I):I_dual", "exponents": [18,19,20,21,22,23,24,25,26]},
     {"name": "R:I_dual", "exponents": [9,12,15]}]},
  {"name": "no.100", "generators": [9,12,15,19,26], "d": 3, "triple": [9,12,15],
   "identities": [
     {"name": "K", "exponents": [0,3,7,10]},
     {"name": "I_dual", "exponents": [0,7]},
     {"name": "R:I", "exponents": [9,12,15]},
     {"name": "I_dual:I", "exponents": [9,12,15,16,19,22]},
     {"name": "(R:I):I_dual", "exponents": [21,24,27,28,31,34,35,38,41]},
     {"name": "R:I_dual", "exponents": [12,19,26]}]},
  {"name": "no.103", "generators": [9,15,17,19,21], "d": 2, "triple": [15,17,19],
   "identities": [
     {"name": "K", "exponents": [0,2,6,8]},
     {"name": "I_dual", "exponents": [0,6]},
     {"name": "R:I", "exponents": [15,17,19]},
     {"name": "I_dual:I", "exponents": [15,17,19,21,23,25]},
     {"name": "(R:I):I_dual", "exponents": [24,26,28,30,32,34,36,38,40]},
     {"name": "R:I_dual", "exponents": [9,15,21]}]}
])json";

constexpr std::string_view kClassifiedSamples = R"json([
  {"name": "no.15", "generators": [9,12,15,19,20], "face": 1},
  {"name": "no.17", "generators": [9,10,11,12,15], "face": 2},
  {"name": "no.97", "generators": [9,12,15,26,28], "face": 3},
  {"name": "no.100", "generators": [9,12,15,19,26], "face": 4},
  {"name": "no.102", "generators": [9,12,15,17,19], "face": 5},
  {"name": "no.103", "generators": [9,15,17,19,21], "face": 6},
  {"name": "H2", "generators": [9,11,12,13,15], "face": 8},
  {"name": "H3", "generators": [9,12,14,15,16], "face": 22},
  {"name": "no.36", "generators": [9,19,20,25,31], "face": 0},
  {"name": "no.1", "generators": [9,13,19,20,21], "face": 0}
])json";

const json& load(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string_view, json> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& doc : documents()) {
    if (doc.name != name) continue;
    if (fnv1a(doc.text) != doc.checksum)
      throw Error(ErrorCode::CorruptCatalog, "checksum mismatch in embedded fixture '" + std::string(name) + "'");
    return cache.emplace(doc.name, json::parse(doc.text)).first->second;
  }
  throw Error(ErrorCode::CorruptCatalog, "no embedded fixture named '" + std::string(name) + "'");
}

Quadruple to_quadruple(const json& j) { return {j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>(), j[3].get<Int>()}; }

}  // namespace

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::vector<Document>& documents() {
  static const std::vector<Document> docs{
      {"quadruple_orbits", kQuadrupleOrbits, 0xc20be763961e957dULL},
      {"burch_table", kBurchTable, 0x200d0f4bbe187e52ULL},
      {"face_orbits", kFaceOrbits, 0x4c1bfba207d79294ULL},
      {"faces", kFaces, 0xb01712f6456dba13ULL},
      {"gluing_bases", kGluingBases, 0xb6827ad35a7fa8d9ULL},
      {"gluing_table", kGluingTable, 0x46fd642675c00675ULL},
      {"worked_examples", kWorkedExamples, 0x8da8fa4083a62398ULL},
      {"classified_samples", kClassifiedSamples, 0x90889fff2b5b974aULL},
  };
  return docs;
}

const std::vector<std::array<Quadruple, 6>>& quadruple_orbits() {
  static const auto rows = [] {
    std::vector<std::array<Quadruple, 6>> out;
    for (const auto& row : load("quadruple_orbits")) {
      std::array<Quadruple, 6> r{};
      for (std::size_t s = 0; s < 6; ++s) r[s] = to_quadruple(row[s]);
      out.push_back(r);
    }
    return out;
  }();
  return rows;
}

const std::vector<BurchRow>& burch_table() {
  static const auto rows = [] {
    std::vector<BurchRow> out;
    for (const auto& r : load("burch_table"))
      out.push_back({r["no"].get<int>(), r["generators"].get<std::vector<Int>>(), r["burch"].get<bool>()});
    return out;
  }();
  return rows;
}

const std::array<std::array<int, 6>, 6>& face_orbits() {
  static const auto grid = [] {
    std::array<std::array<int, 6>, 6> out{};
    const auto& j = load("face_orbits");
    for (std::size_t s = 0; s < 6; ++s)
      for (std::size_t f = 0; f < 6; ++f) out[s][f] = j[s][f].get<int>();
    return out;
  }();
  return grid;
}

const std::vector<FaceRow>& faces() {
  static const auto rows = [] {
    std::vector<FaceRow> out;
    for (const auto& r : load("faces")) {
      FaceRow row;
      row.id = r["id"].get<int>();
      row.sample_no = r.value("sample", 0);
      for (const auto& p : r["pairs"]) row.pairs.emplace_back(p[0].get<Int>(), p[1].get<Int>());
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

const std::vector<GluingBase>& gluing_bases() {
  static const auto rows = [] {
    std::vector<GluingBase> out;
    for (const auto& r : load("gluing_bases"))
      out.push_back({r["name"].get<std::string>(), r["generators"].get<std::vector<Int>>(),
                     r["canonical"].get<std::vector<Int>>(), r["ideal"].get<std::vector<Int>>()});
    return out;
  }();
  return rows;
}

const std::vector<GluingRow>& gluing_table() {
  static const auto rows = [] {
    std::vector<GluingRow> out;
    for (const auto& r : load("gluing_table"))
      out.push_back({r["multiplicity"].get<Int>(), r["base"].get<std::string>(), r["b"].get<Int>(),
                     r["generators"].get<std::vector<Int>>(), r["canonical"].get<std::vector<Int>>(),
                     r["ideal"].get<std::vector<Int>>()});
    return out;
  }();
  return rows;
}

const std::vector<WorkedExample>& worked_examples() {
  static const auto rows = [] {
    std::vector<WorkedExample> out;
    for (const auto& r : load("worked_examples")) {
      WorkedExample ex;
      ex.name = r["name"].get<std::string>();
      ex.generators = r["generators"].get<std::vector<Int>>();
      ex.d = r["d"].get<Int>();
      for (std::size_t k = 0; k < 3; ++k) ex.ring_colon_triple[k] = r["triple"][k].get<Int>();
      for (const auto& id : r["identities"])
        ex.identities.push_back({id["name"].get<std::string>(), id["exponents"].get<std::vector<Int>>()});
      out.push_back(std::move(ex));
    }
    return out;
  }();
  return rows;
}

const std::vector<ClassifiedSample>& classified_samples() {
  static const auto rows = [] {
    std::vector<ClassifiedSample> out;
    for (const auto& r : load("classified_samples"))
      out.push_back({r["name"].get<std::string>(), r["generators"].get<std::vector<Int>>(), r["face"].get<int>()});
    return out;
  }();
  return rows;
}

}  // namespace nsgr::fixtures
