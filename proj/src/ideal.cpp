#include "nsgr/ideal.hpp"

#include <algorithm>
#include <string>

#include "nsgr/error.hpp"
#include "nsgr/limits.hpp"

namespace nsgr {
namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ambient(a, b)) throw Error(ErrorCode::AmbientMismatch, "ideals live over different semigroups");
}

// Minimal exponents of the ideal whose value set is {x : pred(x)}. The
// predicate must be false below `lo`, closed under adding elements of H, and
// true from `hi` on.
template <class Pred>
MonomialIdeal ideal_from_window(const SemigroupPtr& h, Int lo, Int hi, Pred pred) {
  const Int e = h->multiplicity();
  if (hi - lo > resource_limits().residues)
    throw Error(ErrorCode::CapExceeded, "value-set window of length " + std::to_string(hi - lo) + " exceeds cap");
  const auto& mingens = h->generators();
  std::vector<Int> out;
  for (Int x = lo; x < hi + e; ++x) {
    if (!pred(x)) continue;
    bool minimal = true;
    for (Int a : mingens) {
      if (x - a >= lo && pred(x - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "value-set window produced no generators");
  return MonomialIdeal(h, std::move(out));
}

}  // namespace

MonomialIdeal::MonomialIdeal(SemigroupPtr ambient, std::vector<Int> exponents) : ambient_(std::move(ambient)) {
  if (exponents.empty()) throw Error(ErrorCode::InvalidInput, "an ideal needs at least one exponent");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  shift_ = exponents.front();
  for (Int x : exponents) {
    const Int g = checked_sub(x, shift_);
    bool redundant = false;
    for (Int kept : gens_) {
      if (ambient_->contains(g - kept)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal::MonomialIdeal(const NumericalSemigroup& ambient, std::vector<Int> exponents)
    : MonomialIdeal(std::make_shared<const NumericalSemigroup>(ambient), std::move(exponents)) {}

std::vector<Int> MonomialIdeal::exponents() const {
  std::vector<Int> out;
  out.reserve(gens_.size());
  for (Int g : gens_) out.push_back(shift_ + g);
  return out;
}

MonomialIdeal MonomialIdeal::normalized() const { return shifted(-shift_); }

MonomialIdeal MonomialIdeal::shifted(Int by) const {
  MonomialIdeal out = *this;
  out.shift_ = checked_add(shift_, by);
  return out;
}

std::string MonomialIdeal::pretty() const {
  std::string s = "(";
  bool first = true;
  for (Int x : exponents()) {
    if (!first) s += ", ";
    first = false;
    if (x == 0) s += "1";
    else if (x == 1) s += "t";
    else s += "t^" + std::to_string(x);
  }
  return s + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_ambient(a, b) && a.shift_ == b.shift_ && a.gens_ == b.gens_;
}

MonomialIdeal ideal_from_exponents(SemigroupPtr h, std::vector<Int> exps) {
  return MonomialIdeal(std::move(h), std::move(exps)).normalized();
}

MonomialIdeal ideal_from_exponents(const NumericalSemigroup& h, std::vector<Int> exps) {
  return MonomialIdeal(h, std::move(exps)).normalized();
}

bool same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
  return a.ambient_ptr() == b.ambient_ptr() || a.ambient() == b.ambient();
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  return a.shift() == b.shift() && a.gens() == b.gens();
}

bool equal_up_to_shift(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  return a.gens() == b.gens();
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  for (Int x : a.exponents())
    if (!b.value_contains(x)) return false;
  return true;
}

MonomialIdeal multiply(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ambient(i, j);
  std::vector<Int> sums;
  sums.reserve(i.mu() * j.mu());
  for (Int x : i.exponents())
    for (Int y : j.exponents()) sums.push_back(checked_add(x, y));
  return MonomialIdeal(i.ambient_ptr(), std::move(sums));
}

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ambient(i, j);
  const Int f = i.ambient().frobenius();
  const Int lo = i.min_exponent() - j.min_exponent();
  const Int hi = i.max_exponent() + f + 1 - j.min_exponent();
  const auto jexps = j.exponents();
  return ideal_from_window(i.ambient_ptr(), lo, std::max(lo, hi), [&](Int x) {
    for (Int g : jexps)
      if (!i.value_contains(x + g)) return false;
    return true;
  });
}

MonomialIdeal colon_in_ring(const MonomialIdeal& j1, Int g) {
  const auto& h = j1.ambient();
  const Int hi = std::max<Int>(0, j1.max_exponent() + h.frobenius() + 1 - g) + h.frobenius() + 1;
  return ideal_from_window(j1.ambient_ptr(), 0, hi,
                           [&](Int x) { return h.contains(x) && j1.value_contains(x + g); });
}

MonomialIdeal canonical_ideal(SemigroupPtr h) {
  const Int f = h->frobenius();
  std::vector<Int> exps;
  for (Int p : pseudo_frobenius(*h)) exps.push_back(f - p);
  return ideal_from_exponents(std::move(h), std::move(exps));
}

MonomialIdeal canonical_ideal(const NumericalSemigroup& h) {
  return canonical_ideal(std::make_shared<const NumericalSemigroup>(h));
}

MonomialIdeal dual(const MonomialIdeal& i) {
  return colon(canonical_ideal(i.ambient_ptr()), i).normalized();
}

}  // namespace nsgr
