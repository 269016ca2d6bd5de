#include "nsgr/kunz_faces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nsgr/error.hpp"
#include "nsgr/fixtures.hpp"

namespace nsgr {
namespace {

bool in_quad(const Quadruple& q, Int x) { return std::find(q.begin(), q.end(), x) != q.end(); }

bool has_all(const FaceDelta& d, std::initializer_list<std::pair<Int, Int>> pairs) {
  for (auto [i, j] : pairs)
    if (!d.contains(i, j)) return false;
  return true;
}

}  // namespace

FaceDelta::FaceDelta(Int modulus, std::vector<std::pair<Int, Int>> raw) : m(modulus) {
  for (auto [i, j] : raw) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > m - 1 || (i + j) % m == 0)
      throw Error(ErrorCode::InvalidInput,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not an index pair mod " + std::to_string(m));
    pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool FaceDelta::contains(Int i, Int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{i, j});
}

std::string FaceDelta::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second) + ")";
  }
  return s + "}";
}

FaceDelta delta_of(const NumericalSemigroup& h, Int m) {
  const AperySet ap = apery(h, m);
  auto at = [&](Int i) { return ap.elements[static_cast<std::size_t>(i)]; };
  std::vector<std::pair<Int, Int>> pairs;
  for (Int i = 1; i < m; ++i)
    for (Int j = i; j < m; ++j)
      if ((i + j) % m != 0 && at(i) + at(j) == at((i + j) % m)) pairs.emplace_back(i, j);
  return FaceDelta(m, std::move(pairs));
}

std::vector<Int> generator_classes(const FaceDelta& delta) {
  std::vector<bool> hit(static_cast<std::size_t>(delta.m), false);
  for (auto [i, j] : delta.pairs) hit[static_cast<std::size_t>((i + j) % delta.m)] = true;
  std::vector<Int> out;
  for (Int r = 1; r < delta.m; ++r)
    if (!hit[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

std::optional<Quadruple> quadruple_of(const FaceDelta& delta) {
  const auto classes = generator_classes(delta);
  if (delta.m != 9 || classes.size() != 4) return std::nullopt;
  return Quadruple{classes[0], classes[1], classes[2], classes[3]};
}

bool satisfies_R1_R4(const FaceDelta& delta, const Quadruple& quad) {
  const Int m = delta.m;
  for (auto [i, j] : delta.pairs) {
    if (in_quad(quad, (i + j) % m)) return false;          // R1
    if (!in_quad(quad, i) || !in_quad(quad, j)) return false;  // R2
  }
  for (Int r = 1; r < m; ++r) {  // R3
    if (in_quad(quad, r)) continue;
    bool covered = false;
    for (auto [i, j] : delta.pairs) covered = covered || (i + j) % m == r;
    if (!covered) return false;
  }
  for (Int s : quad) {  // R4
    bool used = false;
    for (auto [i, j] : delta.pairs) used = used || i == s || j == s;
    if (!used) return false;
  }
  return true;
}

std::vector<int> violated_R5_R9(const FaceDelta& d) {
  std::vector<int> out;
  const bool a = has_all(d, {{1, 2}, {2, 6}, {6, 7}});
  const bool b = has_all(d, {{1, 7}, {2, 2}, {6, 6}});
  if (a && !b) out.push_back(5);
  if (b && !a) out.push_back(6);
  if (has_all(d, {{1, 4}, {1, 7}, {4, 4}, {7, 7}})) out.push_back(7);
  if (has_all(d, {{1, 4}, {1, 7}, {4, 7}})) out.push_back(8);
  if (has_all(d, {{1, 1}, {4, 4}, {7, 7}})) out.push_back(9);
  return out;
}

std::vector<FaceDelta> enumerate_deltas(const Quadruple& quad, bool apply_lemma_rules) {
  constexpr Int m = 9;
  for (std::size_t k = 0; k < 4; ++k)
    if (quad[k] < 1 || quad[k] > m - 1 || (k && quad[k - 1] >= quad[k]))
      throw Error(ErrorCode::InvalidInput, "quadruple must satisfy 1 <= a < b < c < d <= 8");
  std::vector<std::pair<Int, Int>> allowed;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x; y < 4; ++y) {
      const Int s = (quad[x] + quad[y]) % m;
      if (s != 0 && !in_quad(quad, s)) allowed.emplace_back(quad[x], quad[y]);
    }
  std::vector<FaceDelta> out;
  const std::size_t n = allowed.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::pair<Int, Int>> chosen;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) chosen.push_back(allowed[k]);
    FaceDelta d(m, std::move(chosen));
    if (!satisfies_R1_R4(d, quad)) continue;
    if (apply_lemma_rules && !satisfies_R5_R9(d)) continue;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Int checked_unit(Int sigma, Int m) {
  if (sigma < 1 || sigma >= m || std::gcd(sigma, m) != 1)
    throw Error(ErrorCode::InvalidAutomorphism, std::to_string(sigma) + " is not a unit mod " + std::to_string(m));
  return sigma;
}

}  // namespace

Quadruple act(Int sigma, const Quadruple& quad, Int m) {
  checked_unit(sigma, m);
  Quadruple out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = sigma * quad[k] % m;
  std::sort(out.begin(), out.end());
  return out;
}

FaceDelta act(Int sigma, const FaceDelta& delta) {
  checked_unit(sigma, delta.m);
  std::vector<std::pair<Int, Int>> pairs;
  for (auto [i, j] : delta.pairs) pairs.emplace_back(sigma * i % delta.m, sigma * j % delta.m);
  return FaceDelta(delta.m, std::move(pairs));
}

const std::vector<Quadruple>& representative_quadruples() {
  static const auto reps = [] {
    std::vector<Quadruple> out;
    for (const auto& row : fixtures::quadruple_orbits()) out.push_back(row[0]);
    return out;
  }();
  return reps;
}

const std::vector<FaceCatalogEntry>& face_catalog() {
  static const auto catalog = [] {
    std::vector<FaceCatalogEntry> out;
    for (const auto& row : fixtures::faces()) out.push_back({row.id, FaceDelta(9, row.pairs), 1, row.id});
    if (out.size() != 24) throw Error(ErrorCode::CorruptCatalog, "face catalog must have 24 entries");
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (out[k].id != static_cast<int>(k) + 1) throw Error(ErrorCode::CorruptCatalog, "face ids out of order");
      for (std::size_t l = 0; l < k; ++l)
        if (out[l].delta == out[k].delta) throw Error(ErrorCode::CorruptCatalog, "duplicate face delta");
    }
    // The orbit grid assigns each face a (sigma, source) pair; the first
    // assignment found in grid order is recorded.
    const auto& grid = fixtures::face_orbits();
    std::vector<bool> assigned(24, false);
    for (std::size_t s = 0; s < 6; ++s) {
      for (std::size_t f = 0; f < 6; ++f) {
        const int id = grid[s][f];
        auto& entry = out[static_cast<std::size_t>(id - 1)];
        if (act(kUnits9[s], out[f].delta) != entry.delta)
          throw Error(ErrorCode::CorruptCatalog, "F_" + std::to_string(id) + " is not sigma=" +
                                                     std::to_string(kUnits9[s]) + " applied to F_" + std::to_string(f + 1));
        if (!assigned[static_cast<std::size_t>(id - 1)]) {
          assigned[static_cast<std::size_t>(id - 1)] = true;
          entry.sigma = kUnits9[s];
          entry.source = static_cast<int>(f) + 1;
        }
      }
    }
    for (const auto& e : out) {
      const auto quad = quadruple_of(e.delta);
      if (!quad || !satisfies_R1_R4(e.delta, *quad) || !satisfies_R5_R9(e.delta))
        throw Error(ErrorCode::CorruptCatalog, "F_" + std::to_string(e.id) + " fails the admissibility rules");
    }
    return out;
  }();
  return catalog;
}

std::optional<int> catalog_face_of(const FaceDelta& delta) {
  for (const auto& e : face_catalog())
    if (e.delta == delta) return e.id;
  return std::nullopt;
}

std::vector<std::array<Quadruple, 6>> quadruple_orbit_table() {
  std::vector<std::array<Quadruple, 6>> out;
  for (const auto& q : representative_quadruples()) {
    std::array<Quadruple, 6> row{};
    for (std::size_t s = 0; s < 6; ++s) row[s] = act(kUnits9[s], q);
    out.push_back(row);
  }
  return out;
}

std::array<std::array<int, 6>, 6> face_orbit_table() {
  std::array<std::array<int, 6>, 6> out{};
  const auto& catalog = face_catalog();
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t f = 0; f < 6; ++f) out[s][f] = catalog_face_of(act(kUnits9[s], catalog[f].delta)).value_or(0);
  return out;
}

std::optional<NumericalSemigroup> sample_for_delta(const FaceDelta& delta, Int coordinate_cap) {
  const Int m = delta.m;
  if (coordinate_cap < 1) return std::nullopt;
  // One check per pair (i, j), run once the largest of i, j, (i+j) mod m is
  // assigned: mu_i + mu_j + carry >= mu_k, with equality exactly on delta.
  struct Check {
    Int i, j, k, carry;
    bool equal;
  };
  std::vector<std::vector<Check>> checks(static_cast<std::size_t>(m));
  for (Int i = 1; i < m; ++i)
    for (Int j = i; j < m; ++j) {
      if ((i + j) % m == 0) continue;
      const Int k = (i + j) % m;
      checks[static_cast<std::size_t>(std::max({i, j, k}))].push_back({i, j, k, i + j > m ? 1 : 0, delta.contains(i, j)});
    }
  std::vector<Int> mu(static_cast<std::size_t>(m), 0);
  auto ok_at = [&](Int r) {
    for (const auto& c : checks[static_cast<std::size_t>(r)]) {
      const Int lhs = mu[static_cast<std::size_t>(c.i)] + mu[static_cast<std::size_t>(c.j)] + c.carry;
      const Int rhs = mu[static_cast<std::size_t>(c.k)];
      if (lhs < rhs || (lhs == rhs) != c.equal) return false;
    }
    return true;
  };
  Int r = 1;
  mu[1] = 0;
  while (r >= 1) {
    if (++mu[static_cast<std::size_t>(r)] > coordinate_cap) {
      mu[static_cast<std::size_t>(r)] = 0;
      --r;
      continue;
    }
    if (!ok_at(r)) continue;
    if (r == m - 1) {
      KunzPoint p{m, std::vector<Int>(mu.begin() + 1, mu.end())};
      return semigroup_from_kunz(p);
    }
    ++r;
    mu[static_cast<std::size_t>(r)] = 0;
  }
  return std::nullopt;
}

}  // namespace nsgr
