#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <utility>
#include <vector>

namespace nsgr {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
bool is_zero(const Scalar& x) {
  if constexpr (requires { x.is_zero(); }) return x.is_zero();
  else return x == Scalar(0);
}

/// Reduced row echelon form, exact for field scalars. Zero rows are dropped,
/// pivots are chosen left to right, so the result is canonical for the row
/// space. Pivot columns are written to `pivots` when given.
template <class Derived>
DenseMatrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input,
                                           std::vector<Eigen::Index>* pivots = nullptr) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = input;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> piv;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != rank) a.row(p).swap(a.row(rank));
    const Scalar lead = a(rank, c);
    for (Eigen::Index j = c; j < a.cols(); ++j)
      if (!is_zero(a(rank, j))) a(rank, j) /= lead;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == rank || is_zero(a(r, c))) continue;
      const Scalar f = a(r, c);
      for (Eigen::Index j = c; j < a.cols(); ++j)
        if (!is_zero(a(rank, j))) a(r, j) -= f * a(rank, j);
    }
    piv.push_back(c);
    ++rank;
  }
  if (pivots) *pivots = piv;
  return a.topRows(rank);
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rref(a).rows();
}

/// Basis of { v : a v = 0 }, one vector per row.
template <class Derived>
DenseMatrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  const DenseMatrix<Scalar> r = rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index n = a.cols();
  DenseMatrix<Scalar> basis(n - static_cast<Eigen::Index>(pivots.size()), n);
  basis.setZero();
  Eigen::Index row = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(row, free) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(row, pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
    ++row;
  }
  return basis;
}

/// A subspace of Scalar^n held as its reduced row echelon basis. Rows that
/// are unit vectors are kept as a column mask, the remaining rows densely
/// with zeros in the masked columns; together they form the echelon basis.
template <class Scalar>
class RowSpace {
 public:
  using SparseRow = std::vector<std::pair<Eigen::Index, Scalar>>;

  explicit RowSpace(Eigen::Index ambient_dim = 0)
      : unit_(static_cast<std::size_t>(ambient_dim), false), rest_(0, ambient_dim) {}

  template <class Derived>
  static RowSpace span(const Eigen::MatrixBase<Derived>& rows) {
    RowSpace s(rows.cols());
    s.rest_ = rows;
    s.reduce();
    return s;
  }

  /// Span of the given unit vectors.
  static RowSpace coordinates(Eigen::Index ambient_dim, const std::vector<Eigen::Index>& columns) {
    RowSpace s(ambient_dim);
    for (auto c : columns) s.unit_[static_cast<std::size_t>(c)] = true;
    return s;
  }

  /// { v : a v = 0 }. Columns that vanish in `a` contribute unit vectors
  /// without entering the elimination.
  template <class Derived>
  static RowSpace kernel_of(const Eigen::MatrixBase<Derived>& a) {
    const Eigen::Index n = a.cols();
    std::vector<Eigen::Index> active, idle;
    for (Eigen::Index c = 0; c < n; ++c) {
      bool vanishes = true;
      for (Eigen::Index r = 0; r < a.rows() && vanishes; ++r) vanishes = is_zero(a(r, c));
      (vanishes ? idle : active).push_back(c);
    }
    RowSpace s = coordinates(n, idle);
    if (active.empty()) return s;
    DenseMatrix<Scalar> sub(a.rows(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(active[k]);
    const DenseMatrix<Scalar> ns = nullspace(sub);
    s.rest_ = DenseMatrix<Scalar>::Zero(ns.rows(), n);
    for (std::size_t k = 0; k < active.size(); ++k) s.rest_.col(active[k]) = ns.col(static_cast<Eigen::Index>(k));
    s.reduce();
    return s;
  }

  /// Span of unit vectors and sparse rows.
  static RowSpace from_rows(Eigen::Index ambient_dim, const std::vector<Eigen::Index>& units,
                            const std::vector<SparseRow>& rows) {
    RowSpace s = coordinates(ambient_dim, units);
    s.rest_ = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()), ambient_dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) s.rest_(static_cast<Eigen::Index>(r), c) += v;
    s.reduce();
    return s;
  }

  Eigen::Index dim() const noexcept { return units() + rest_.rows(); }
  Eigen::Index ambient_dim() const noexcept { return static_cast<Eigen::Index>(unit_.size()); }
  Eigen::Index units() const noexcept {
    return static_cast<Eigen::Index>(std::count(unit_.begin(), unit_.end(), true));
  }
  bool is_unit(Eigen::Index c) const { return unit_[static_cast<std::size_t>(c)]; }
  /// Echelon rows that are not unit vectors.
  const DenseMatrix<Scalar>& rest() const noexcept { return rest_; }

  /// Echelon basis as sparse rows ordered by pivot column.
  std::vector<SparseRow> rows() const {
    std::vector<SparseRow> out;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < ambient_dim(); ++c) {
      if (is_unit(c)) {
        out.push_back({{c, Scalar(1)}});
      } else if (r < rest_.rows() && !is_zero(rest_(r, c))) {
        SparseRow row;
        for (Eigen::Index j = c; j < ambient_dim(); ++j)
          if (!is_zero(rest_(r, j))) row.emplace_back(j, rest_(r, j));
        out.push_back(std::move(row));
        ++r;
      }
    }
    return out;
  }

  /// Echelon basis as a dense matrix.
  DenseMatrix<Scalar> basis() const {
    const auto rs = rows();
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rs.size()), ambient_dim());
    for (std::size_t r = 0; r < rs.size(); ++r)
      for (const auto& [c, v] : rs[r]) out(static_cast<Eigen::Index>(r), c) = v;
    return out;
  }

  /// Span of both.
  RowSpace operator+(const RowSpace& other) const {
    RowSpace s(ambient_dim());
    for (std::size_t c = 0; c < unit_.size(); ++c) s.unit_[c] = unit_[c] || other.unit_[c];
    s.rest_.resize(rest_.rows() + other.rest_.rows(), ambient_dim());
    s.rest_ << rest_, other.rest_;
    s.reduce();
    return s;
  }

  bool contains(const RowSpace& other) const { return (*this + other).dim() == dim(); }

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b);
  }

 private:
  // Clears masked columns, reduces, and moves unit rows into the mask until
  // none remain.
  void reduce() {
    for (;;) {
      for (Eigen::Index c = 0; c < rest_.cols(); ++c)
        if (is_unit(c)) rest_.col(c).setZero();
      rest_ = rref(rest_);
      bool moved = false;
      for (Eigen::Index r = 0; r < rest_.rows(); ++r) {
        Eigen::Index nonzero = 0, at = 0;
        for (Eigen::Index c = 0; c < rest_.cols() && nonzero < 2; ++c)
          if (!is_zero(rest_(r, c))) ++nonzero, at = c;
        if (nonzero == 1) unit_[static_cast<std::size_t>(at)] = moved = true;
      }
      if (!moved) return;
    }
  }

  std::vector<bool> unit_;
  DenseMatrix<Scalar> rest_;
};

}  // namespace nsgr
