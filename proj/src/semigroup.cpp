#include "nsgr/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "nsgr/limits.hpp"

namespace nsgr {
namespace {

constexpr Int kUnreached = -1;

// Shortest representation in each residue class mod `base`, by Dijkstra over
// the residue graph with one edge per generator.
std::vector<Int> residue_minima(std::span<const Int> gens, Int base) {
  if (base > resource_limits().residues)
    throw Error(ErrorCode::CapExceeded, "Apéry base " + std::to_string(base) + " exceeds residue cap");
  std::vector<Int> dist(static_cast<std::size_t>(base), kUnreached);
  using Entry = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(residue)]) continue;
    for (Int g : gens) {
      const Int next = checked_add(value, g);
      const auto r = static_cast<std::size_t>(next % base);
      if (dist[r] == kUnreached || next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, static_cast<Int>(r));
      }
    }
  }
  return dist;
}

bool in_semigroup(const std::vector<Int>& apery, Int n) {
  if (n < 0) return false;
  const Int e = static_cast<Int>(apery.size());
  return n >= apery[static_cast<std::size_t>(n % e)];
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidSemigroup, "empty generator list");
  Int g = 0;
  for (Int x : raw) {
    if (x <= 0) throw Error(ErrorCode::InvalidSemigroup, "generator " + std::to_string(x) + " is not positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::InvalidSemigroup, "generators have gcd " + std::to_string(g));

  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Int e = sorted.front();

  apery_ = residue_minima(sorted, e);
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - e;

  // Besides e, the minimal generators are the nonzero Apéry elements that are
  // minimal for the order a <= b iff b - a in H.
  generators_.push_back(e);
  std::vector<Int> nonzero;
  for (std::size_t i = 1; i < apery_.size(); ++i) nonzero.push_back(apery_[i]);
  std::sort(nonzero.begin(), nonzero.end());
  for (Int w : nonzero) {
    bool minimal = true;
    for (Int v : nonzero) {
      if (v >= w) break;
      if (in_semigroup(apery_, w - v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) generators_.push_back(w);
  }
}

NumericalSemigroup minimalize_generators(std::span<const Int> raw) { return NumericalSemigroup(raw); }

AperySet apery(const NumericalSemigroup& h, Int c) {
  if (c <= 0 || !h.contains(c))
    throw Error(ErrorCode::InvalidBase, std::to_string(c) + " is not a positive element of the semigroup");
  if (c == h.multiplicity()) return {c, h.apery_at_multiplicity()};
  return {c, residue_minima(h.generators(), c)};
}

std::vector<Int> gaps(const NumericalSemigroup& h) {
  std::vector<Int> out;
  for (Int n = 1; n <= h.frobenius(); ++n)
    if (!h.contains(n)) out.push_back(n);
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h) {
  const auto& ap = h.apery_at_multiplicity();
  std::vector<Int> out;
  for (Int w : ap) {
    bool maximal = true;
    for (Int v : ap) {
      if (v > w && h.contains(v - w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(w - h.multiplicity());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int cm_type(const NumericalSemigroup& h) { return static_cast<Int>(pseudo_frobenius(h).size()); }

KunzPoint kunz_coordinates(const NumericalSemigroup& h, Int m) {
  if (m < 3) throw Error(ErrorCode::InvalidBase, "Kunz coordinates need m >= 3, got " + std::to_string(m));
  const AperySet ap = apery(h, m);
  KunzPoint p{m, {}};
  p.mu.reserve(static_cast<std::size_t>(m - 1));
  for (Int i = 1; i < m; ++i) p.mu.push_back((ap.elements[static_cast<std::size_t>(i)] - i) / m);
  return p;
}

std::optional<std::pair<Int, Int>> kunz_violation(const KunzPoint& p) {
  const Int m = p.m;
  auto mu = [&](Int i) { return p.mu[static_cast<std::size_t>(i - 1)]; };
  for (Int i = 1; i < m; ++i) {
    if (mu(i) < 0) return std::pair{i, i};
    for (Int j = i; j < m; ++j) {
      if (i + j == m) continue;
      if (i + j < m) {
        if (mu(i) + mu(j) < mu(i + j)) return std::pair{i, j};
      } else if (mu(i) + mu(j) < mu(i + j - m) - 1) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

NumericalSemigroup semigroup_from_kunz(const KunzPoint& p) {
  if (p.m < 3 || static_cast<Int>(p.mu.size()) != p.m - 1)
    throw Error(ErrorCode::InvalidInput, "Kunz point must have m >= 3 and m - 1 coordinates");
  if (auto bad = kunz_violation(p))
    throw Error(ErrorCode::NotInPolyhedron,
                "inequality for (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ") fails");
  std::vector<Int> gens{p.m};
  for (Int i = 1; i < p.m; ++i)
    gens.push_back(checked_add(i, checked_mul(p.mu[static_cast<std::size_t>(i - 1)], p.m)));
  return NumericalSemigroup(gens);
}

// --- enumeration -----------------------------------------------------------

SemigroupEnumerator::SemigroupEnumerator(Int m, Int frobenius_cap)
    : m_(m), frobenius_cap_(frobenius_cap) {
  if (m < 2) throw Error(ErrorCode::InvalidInput, "multiplicity must be at least 2");
  if (frobenius_cap < m - 1)
    throw Error(ErrorCode::InvalidInput, "Frobenius cap must be at least m - 1");
  coordinate_cap_ = (frobenius_cap + 1 + m - 1) / m + 1;
  // Box size coordinate_cap^(m-1), compared without overflowing.
  long double box = 1;
  for (Int i = 1; i < m; ++i) box *= static_cast<long double>(coordinate_cap_);
  if (box > static_cast<long double>(resource_limits().points))
    throw Error(ErrorCode::CapExceeded, "Kunz box for m=" + std::to_string(m) + ", cap=" +
                                            std::to_string(frobenius_cap) + " exceeds point cap");
  mu_.assign(static_cast<std::size_t>(m - 1), 0);
}

bool SemigroupEnumerator::consistent_at(std::size_t k) const {
  const Int r = static_cast<Int>(k) + 1;
  auto mu = [&](Int i) { return mu_[static_cast<std::size_t>(i - 1)]; };
  // h_r - m must not exceed the Frobenius cap.
  if (r + (mu(r) - 1) * m_ > frobenius_cap_) return false;
  for (Int i = 1; i <= r / 2; ++i)
    if (mu(i) + mu(r - i) < mu(r)) return false;
  for (Int i = 1; i <= r; ++i) {
    if (i + r <= m_) continue;
    if (mu(i) + mu(r) < mu(i + r - m_) - 1) return false;
  }
  return true;
}

bool SemigroupEnumerator::advance() {
  const std::size_t n = mu_.size();
  if (done_) return false;
  std::size_t k;
  if (!started_) {
    started_ = true;
    k = 0;
    mu_[0] = 0;
  } else {
    k = n - 1;
  }
  while (true) {
    ++mu_[k];
    if (mu_[k] > coordinate_cap_) {
      mu_[k] = 0;
      if (k == 0) {
        done_ = true;
        return false;
      }
      --k;
      continue;
    }
    if (!consistent_at(k)) continue;
    if (k + 1 == n) return true;
    ++k;
    mu_[k] = 0;
  }
}

std::optional<NumericalSemigroup> SemigroupEnumerator::next() {
  if (mu_.empty()) {
    // m = 1 is rejected by the constructor; m >= 2 always has a coordinate.
    return std::nullopt;
  }
  if (!advance()) return std::nullopt;
  std::vector<Int> gens{m_};
  for (std::size_t i = 0; i < mu_.size(); ++i) gens.push_back(static_cast<Int>(i + 1) + mu_[i] * m_);
  return NumericalSemigroup(gens);
}

std::vector<NumericalSemigroup> enumerate_semigroups(Int m, Int frobenius_cap) {
  SemigroupEnumerator stream(m, frobenius_cap);
  std::vector<NumericalSemigroup> out;
  while (auto h = stream.next()) out.push_back(std::move(*h));
  return out;
}

}  // namespace nsgr
