#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsgr/linalg.hpp"
#include "nsgr/semigroup.hpp"

namespace nsgr {

/// The Artinian algebra k[[H]]/(t^m) for m the multiplicity, in the basis of
/// Apéry classes 0..m-1 (class i is t^{h_i}).
///
/// The product of two basis vectors is again a basis vector or zero, so the
/// structure constants are stored as a class table.
class ArtinAlgebra {
 public:
  static constexpr Int kZero = -1;

  /// Checks commutativity and associativity on all triples; a failure throws
  /// PreconditionViolated.
  explicit ArtinAlgebra(const NumericalSemigroup& h);

  Int dimension() const noexcept { return m_; }
  const std::vector<Int>& degrees() const noexcept { return degrees_; }

  /// Class of e_i * e_j, or kZero.
  Int product(Int i, Int j) const { return table_[static_cast<std::size_t>(i * m_ + j)]; }

  /// Classes spanning soc(A), which is spanned by basis vectors here.
  std::vector<Int> socle() const;
  /// Classes spanning the square of the maximal ideal.
  std::vector<Int> maximal_ideal_square() const;

 private:
  Int m_;
  std::vector<Int> degrees_;
  std::vector<Int> table_;
};

inline ArtinAlgebra artin_algebra(const NumericalSemigroup& h) { return ArtinAlgebra(h); }

/// soc(A_H) is contained in the square of the maximal ideal.
bool socle_in_m2(const NumericalSemigroup& h);

/// Monomials of total degree below `order` in the non-multiplicity generators,
/// ordered by degree then lexicographically (higher exponent of the first
/// variable first).
struct MonomialBasis {
  std::vector<Int> weights;                // t-degree of each variable
  std::vector<std::vector<int>> monomials;
  std::vector<Int> monomial_weight;
  int order = 0;
};

MonomialBasis truncated_monomials(const NumericalSemigroup& h, int order);

/// Kernel of k[x_1..x_n]/(x)^N -> A_H, sending x_k to t^{g_k}.
///
/// The map is homogeneous for the t-degree, so the kernel is stored as one
/// reduced echelon block per t-degree; the union of the block rows is the
/// reduced echelon basis of the whole kernel.
struct TruncatedIdealSubspace {
  struct Block {
    Int weight = 0;
    std::vector<std::size_t> columns;  // global monomial indices, ascending
    RowSpace<Rational> kernel;
  };

  MonomialBasis basis;
  std::vector<Block> blocks;

  std::size_t variables() const noexcept { return basis.weights.size(); }
  int order() const noexcept { return basis.order; }
  std::size_t ambient_dim() const noexcept { return basis.monomials.size(); }
  std::size_t kernel_dim() const;
};

/// `order` 0 means multiplicity + 1. Throws CapExceeded when the monomial
/// count passes the configured limit.
TruncatedIdealSubspace defining_ideal_truncated(const NumericalSemigroup& h, int order = 0);

struct BurchReport {
  bool burch = false;
  int order = 0;
  std::size_t ambient_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t m_ideal_dim = 0;   // dim of m I
  std::size_t m_colon_dim = 0;   // dim of m (I : m)
  bool stable = true;            // same verdict one order higher
};

/// Compares m I with m (I : m) at the given truncation order (0 = default).
BurchReport burch_report(const NumericalSemigroup& h, int order = 0);

/// Burch verdict at the default order, re-checked one order higher. A
/// disagreement throws PreconditionViolated.
bool is_burch(const NumericalSemigroup& h);

struct KernelEntry {
  std::size_t row = 0;
  std::vector<int> monomial;
  std::size_t column = 0;
  std::string value;
};

/// Echelon basis of the truncated kernel as sparse triples, rows ordered by
/// pivot column.
std::vector<KernelEntry> kernel_triples(const TruncatedIdealSubspace& ideal);

}  // namespace nsgr
