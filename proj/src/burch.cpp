#include "nsgr/burch.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nsgr/error.hpp"
#include "nsgr/limits.hpp"

namespace nsgr {

ArtinAlgebra::ArtinAlgebra(const NumericalSemigroup& h) : m_(h.multiplicity()), degrees_(h.apery_at_multiplicity()) {
  const auto m = static_cast<std::size_t>(m_);
  table_.assign(m * m, kZero);
  for (Int i = 0; i < m_; ++i) {
    for (Int j = 0; j < m_; ++j) {
      const Int s = degrees_[static_cast<std::size_t>(i)] + degrees_[static_cast<std::size_t>(j)];
      const Int c = s % m_;
      if (s == degrees_[static_cast<std::size_t>(c)]) table_[static_cast<std::size_t>(i * m_ + j)] = c;
    }
  }
  auto mul = [&](Int a, Int b) { return (a == kZero || b == kZero) ? kZero : product(a, b); };
  for (Int i = 0; i < m_; ++i) {
    for (Int j = 0; j < m_; ++j) {
      if (product(i, j) != product(j, i))
        throw Error(ErrorCode::PreconditionViolated, "structure constants are not commutative");
      for (Int k = 0; k < m_; ++k)
        if (mul(product(i, j), k) != mul(i, product(j, k)))
          throw Error(ErrorCode::PreconditionViolated, "structure constants are not associative");
    }
  }
}

std::vector<Int> ArtinAlgebra::socle() const {
  std::vector<Int> out;
  for (Int i = 1; i < m_; ++i) {
    bool annihilated = true;
    for (Int j = 1; j < m_ && annihilated; ++j) annihilated = product(i, j) == kZero;
    if (annihilated) out.push_back(i);
  }
  return out;
}

std::vector<Int> ArtinAlgebra::maximal_ideal_square() const {
  std::vector<bool> hit(static_cast<std::size_t>(m_), false);
  for (Int i = 1; i < m_; ++i)
    for (Int j = 1; j < m_; ++j)
      if (const Int c = product(i, j); c != kZero) hit[static_cast<std::size_t>(c)] = true;
  std::vector<Int> out;
  for (Int c = 0; c < m_; ++c)
    if (hit[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

bool socle_in_m2(const NumericalSemigroup& h) {
  const ArtinAlgebra a(h);
  const auto sq = a.maximal_ideal_square();
  for (Int c : a.socle())
    if (!std::binary_search(sq.begin(), sq.end(), c)) return false;
  return true;
}

namespace {

void compositions(int n, int degree, std::vector<int>& current, std::size_t pos,
                  std::vector<std::vector<int>>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[pos] = e;
    compositions(n, degree - e, current, pos + 1, out);
  }
}

// Monomial count of degree < order in n variables, C(n + order - 1, n).
long double monomial_count(std::size_t n, int order) {
  long double c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = c * static_cast<long double>(order - 1 + static_cast<int>(i)) / static_cast<long double>(i);
  return c;
}

bool is_apery_degree(const std::vector<Int>& apery, Int w) {
  const Int m = static_cast<Int>(apery.size());
  return apery[static_cast<std::size_t>(w % m)] == w;
}

constexpr std::size_t kTruncated = static_cast<std::size_t>(-1);

// Position of a monomial in the order produced by truncated_monomials.
class MonomialRank {
 public:
  MonomialRank(std::size_t n, int order) : n_(n) {
    const auto rows = static_cast<std::size_t>(std::max(order, 1)) + n + 1;
    binom_.assign(rows, std::vector<std::size_t>(rows, 0));
    for (std::size_t a = 0; a < rows; ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
    }
  }

  std::size_t operator()(const std::vector<int>& mono, int degree) const {
    // Monomials of lower degree come first.
    std::size_t r = binom_[static_cast<std::size_t>(degree) + n_ - 1][n_];
    int left = degree;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      // Higher exponents at position i come first.
      for (int e = left; e > mono[i]; --e) r += compositions(left - e, n_ - i - 1);
      left -= mono[i];
    }
    return r;
  }

 private:
  // Ways to write d as an ordered sum of p non-negative parts.
  std::size_t compositions(int d, std::size_t p) const {
    return binom_[static_cast<std::size_t>(d) + p - 1][p - 1];
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> binom_;
};

// Shared bookkeeping for the block computations.
struct BlockIndex {
  std::size_t variables = 0;
  std::map<Int, std::size_t> block_of_weight;
  std::vector<std::size_t> block;  // global monomial index -> block
  std::vector<std::size_t> local;  // global monomial index -> index within its block
  std::vector<std::size_t> next;   // [g * variables + k] -> index of x_k * monomial g, or kTruncated

  BlockIndex(const MonomialBasis& basis, std::vector<TruncatedIdealSubspace::Block>& blocks)
      : variables(basis.weights.size()) {
    const std::size_t total = basis.monomials.size();
    local.resize(total);
    block.resize(total);
    for (std::size_t g = 0; g < total; ++g) {
      const Int w = basis.monomial_weight[g];
      auto [it, fresh] = block_of_weight.emplace(w, blocks.size());
      if (fresh) {
        blocks.emplace_back();
        blocks.back().weight = w;
      }
      auto& cols = blocks[it->second].columns;
      block[g] = it->second;
      local[g] = cols.size();
      cols.push_back(g);
    }
    next.assign(total * variables, kTruncated);
    const MonomialRank rank(variables, basis.order);
    std::vector<int> mono;
    for (std::size_t g = 0; g < total; ++g) {
      int degree = 0;
      for (int e : basis.monomials[g]) degree += e;
      if (degree + 1 >= basis.order) continue;
      for (std::size_t k = 0; k < variables; ++k) {
        mono = basis.monomials[g];
        ++mono[k];
        next[g * variables + k] = rank(mono, degree + 1);
      }
    }
  }

  std::size_t times(std::size_t g, std::size_t k) const { return next[g * variables + k]; }
};

// m * S, where S is given blockwise; result indexed like `blocks`.
std::vector<RowSpace<Rational>> times_maximal_ideal(const std::vector<TruncatedIdealSubspace::Block>& blocks,
                                                   const BlockIndex& index,
                                                   const std::vector<RowSpace<Rational>>& s) {
  using Row = RowSpace<Rational>::SparseRow;
  std::vector<std::vector<Eigen::Index>> units(blocks.size());
  std::vector<std::vector<Row>> rows(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& cols = blocks[b].columns;
    for (Eigen::Index c = 0; c < s[b].ambient_dim(); ++c) {
      if (!s[b].is_unit(c)) continue;
      for (std::size_t k = 0; k < index.variables; ++k) {
        const std::size_t g = index.times(cols[static_cast<std::size_t>(c)], k);
        if (g != kTruncated) units[index.block[g]].push_back(static_cast<Eigen::Index>(index.local[g]));
      }
    }
    const auto& rest = s[b].rest();
    for (Eigen::Index r = 0; r < rest.rows(); ++r)
      for (std::size_t k = 0; k < index.variables; ++k) {
        Row row;
        std::size_t target = kTruncated;
        for (Eigen::Index c = 0; c < rest.cols(); ++c) {
          if (is_zero(rest(r, c))) continue;
          const std::size_t g = index.times(cols[static_cast<std::size_t>(c)], k);
          if (g == kTruncated) continue;
          target = index.block[g];
          row.emplace_back(static_cast<Eigen::Index>(index.local[g]), rest(r, c));
        }
        if (row.size() == 1) units[target].push_back(row.front().first);
        else if (!row.empty()) rows[target].push_back(std::move(row));
      }
  }
  std::vector<RowSpace<Rational>> out;
  out.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    out.push_back(RowSpace<Rational>::from_rows(static_cast<Eigen::Index>(blocks[b].columns.size()), units[b], rows[b]));
  return out;
}

}  // namespace

MonomialBasis truncated_monomials(const NumericalSemigroup& h, int order) {
  MonomialBasis basis;
  basis.order = order;
  const auto& gens = h.generators();
  basis.weights.assign(gens.begin() + 1, gens.end());
  const std::size_t n = basis.weights.size();
  if (monomial_count(n, order) > static_cast<long double>(resource_limits().monomials))
    throw Error(ErrorCode::CapExceeded, "truncated algebra with " + std::to_string(n) + " variables and order " +
                                            std::to_string(order) + " exceeds monomial cap");
  if (n == 0) {
    if (order > 0) {
      basis.monomials.push_back({});
      basis.monomial_weight.push_back(0);
    }
    return basis;
  }
  std::vector<int> current(n, 0);
  for (int d = 0; d < order; ++d) compositions(static_cast<int>(n), d, current, 0, basis.monomials);
  for (const auto& mono : basis.monomials) {
    Int w = 0;
    for (std::size_t k = 0; k < n; ++k) w = checked_add(w, checked_mul(mono[k], basis.weights[k]));
    basis.monomial_weight.push_back(w);
  }
  return basis;
}

std::size_t TruncatedIdealSubspace::kernel_dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += static_cast<std::size_t>(b.kernel.dim());
  return d;
}

TruncatedIdealSubspace defining_ideal_truncated(const NumericalSemigroup& h, int order) {
  if (order == 0) order = static_cast<int>(h.multiplicity()) + 1;
  if (order < 1) throw Error(ErrorCode::InvalidInput, "truncation order must be positive");
  TruncatedIdealSubspace out;
  out.basis = truncated_monomials(h, order);
  BlockIndex index(out.basis, out.blocks);
  const auto& apery = h.apery_at_multiplicity();
  for (auto& block : out.blocks) {
    const auto width = static_cast<Eigen::Index>(block.columns.size());
    // Every monomial of the block evaluates to t^weight, which is a basis
    // vector of A_H exactly when the weight is an Apéry element.
    DenseMatrix<Rational> phi(is_apery_degree(apery, block.weight) ? 1 : 0, width);
    phi.setOnes();
    block.kernel = RowSpace<Rational>::kernel_of(phi);
  }
  if (order > h.multiplicity() &&
      out.kernel_dim() + static_cast<std::size_t>(h.multiplicity()) != out.ambient_dim())
    throw Error(ErrorCode::PreconditionViolated, "evaluation map onto A_H is not surjective");
  return out;
}

BurchReport burch_report(const NumericalSemigroup& h, int order) {
  const TruncatedIdealSubspace ideal = defining_ideal_truncated(h, order);
  const auto& basis = ideal.basis;
  std::vector<TruncatedIdealSubspace::Block> blocks;
  BlockIndex index(basis, blocks);
  const auto& apery = h.apery_at_multiplicity();
  const std::size_t n = basis.weights.size();

  std::vector<RowSpace<Rational>> kernel, colon;
  for (const auto& block : ideal.blocks) kernel.push_back(block.kernel);

  // I : m inside the block of weight w is cut out by one equation per variable
  // x_k whose shifted block evaluates onto a basis vector of A_H.
  for (const auto& block : blocks) {
    const auto width = static_cast<Eigen::Index>(block.columns.size());
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < n; ++k)
      if (is_apery_degree(apery, block.weight + basis.weights[k])) active.push_back(k);
    DenseMatrix<Rational> constraints = DenseMatrix<Rational>::Zero(static_cast<Eigen::Index>(active.size()), width);
    for (std::size_t r = 0; r < active.size(); ++r)
      for (Eigen::Index c = 0; c < width; ++c)
        if (index.times(block.columns[static_cast<std::size_t>(c)], active[r]) != kTruncated)
          constraints(static_cast<Eigen::Index>(r), c) = 1;
    colon.push_back(RowSpace<Rational>::kernel_of(constraints));
  }

  const auto m_ideal = times_maximal_ideal(blocks, index, kernel);
  const auto m_colon = times_maximal_ideal(blocks, index, colon);

  BurchReport r;
  r.order = basis.order;
  r.ambient_dim = ideal.ambient_dim();
  r.kernel_dim = ideal.kernel_dim();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    r.m_ideal_dim += static_cast<std::size_t>(m_ideal[b].dim());
    r.m_colon_dim += static_cast<std::size_t>(m_colon[b].dim());
    if (!(m_ideal[b] == m_colon[b])) r.burch = true;
  }
  return r;
}

bool is_burch(const NumericalSemigroup& h) {
  const int order = static_cast<int>(h.multiplicity()) + 1;
  const BurchReport base = burch_report(h, order);
  const BurchReport next = burch_report(h, order + 1);
  if (base.burch != next.burch)
    throw Error(ErrorCode::PreconditionViolated, "Burch verdict changes with the truncation order");
  return base.burch;
}

std::vector<KernelEntry> kernel_triples(const TruncatedIdealSubspace& ideal) {
  struct Row {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, Rational>> entries;
  };
  std::vector<Row> rows;
  for (const auto& block : ideal.blocks) {
    for (const auto& src : block.kernel.rows()) {
      Row row{0, {}};
      for (const auto& [c, v] : src) row.entries.emplace_back(block.columns[static_cast<std::size_t>(c)], v);
      row.pivot = row.entries.front().first;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  std::vector<KernelEntry> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, v] : rows[r].entries)
      out.push_back({r, ideal.basis.monomials[col], col, v.str()});
  return out;
}

}  // namespace nsgr
