#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "svh/errors.hpp"
#include "svh/rational.hpp"
#include "svh/sparse_matrix.hpp"

namespace svh {

struct EchelonResult {
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // ascending
  std::vector<SparseRow> rows;      // rows[i] has a leading 1 at pivots[i]
  std::vector<DenseVector> nullspace;
};

namespace detail {

// Forward elimination with the pivot taken from the sparsest remaining
// column (ties: lowest column index; row ties: sparsest row, then lowest
// index). Returns a basis of the row space; the rows are not reduced
// against each other.
inline std::vector<SparseRow> sparse_forward(const SparseMatrixQ& m) {
  std::vector<SparseRow> work;
  work.reserve(m.rows());
  for (const auto& r : m.row_data())
    if (!r.empty()) work.push_back(r);

  std::vector<SparseRow> basis;
  std::vector<std::size_t> count(m.cols());
  std::vector<std::size_t> active(work.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  while (!active.empty()) {
    std::fill(count.begin(), count.end(), 0);
    for (auto i : active)
      for (const auto& e : work[i]) ++count[e.col];

    std::size_t col = std::numeric_limits<std::size_t>::max();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < count.size(); ++c)
      if (count[c] > 0 && count[c] < best) {
        best = count[c];
        col = c;
      }
    if (col == std::numeric_limits<std::size_t>::max()) break;

    std::size_t pivot_pos = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      const auto& r = work[active[a]];
      if (!find(r, col)) continue;
      if (pivot_pos == active.size() || r.size() < work[active[pivot_pos]].size()) pivot_pos = a;
    }
    SparseRow pivot = std::move(work[active[pivot_pos]]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    scale(pivot, Rat(1) / *find(pivot, col));

    std::vector<std::size_t> still_active;
    still_active.reserve(active.size());
    for (auto i : active) {
      if (const Rat* v = find(work[i], col)) work[i] = axpy(work[i], *v, pivot);
      if (!work[i].empty()) still_active.push_back(i);
    }
    active = std::move(still_active);
    basis.push_back(std::move(pivot));
  }
  return basis;
}

// Leftmost-pivot Gauss-Jordan on linearly independent rows; the result is
// the unique reduced row echelon form of their span.
inline void canonical_reduce(std::vector<SparseRow>& rows, std::size_t cols,
                             std::vector<std::size_t>& pivots) {
  std::size_t done = 0;
  for (std::size_t c = 0; c < cols && done < rows.size(); ++c) {
    std::size_t r = done;
    while (r < rows.size() && !find(rows[r], c)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[done], rows[r]);
    scale(rows[done], Rat(1) / *find(rows[done], c));
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == done) continue;
      if (const Rat* v = find(rows[o], c)) rows[o] = axpy(rows[o], *v, rows[done]);
    }
    pivots.push_back(c);
    ++done;
  }
  rows.resize(done);
}

} // namespace detail

/// Reduced row echelon form over Q together with a kernel basis.
///
/// The kernel basis sets one free column to 1 at a time, free columns in
/// increasing order, so the output is fully determined by the input.
inline EchelonResult rref(const SparseMatrixQ& m) {
  EchelonResult out;
  out.cols = m.cols();
  out.rows = detail::sparse_forward(m);
  detail::canonical_reduce(out.rows, m.cols(), out.pivots);
  out.rank = out.pivots.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVector v(m.cols());
    v[f] = Rat(1);
    for (std::size_t i = 0; i < out.rows.size(); ++i)
      if (const Rat* x = detail::find(out.rows[i], f)) v[out.pivots[i]] = -*x;
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

inline std::vector<DenseVector> nullspace(const SparseMatrixQ& m) { return rref(m).nullspace; }

/// Incrementally maintained span of dense vectors.
class RowSpan {
public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  DenseVector reduce(DenseVector v) const {
    check(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat f = v[pivots_[i]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c)
        if (!rows_[i][c].is_zero()) v[c] -= f * rows_[i][c];
    }
    return v;
  }

  bool contains(const DenseVector& v) const { return is_zero(reduce(v)); }

  // Returns true when v was independent of the current span.
  bool add(const DenseVector& v) {
    DenseVector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rat& x) { return !x.is_zero(); });
    if (it == r.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - r.begin());
    Rat inv = Rat(1) / r[p];
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

private:
  void check(const DenseVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
  }

  std::size_t dim_;
  std::vector<DenseVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank_of(const std::vector<DenseVector>& vectors, std::size_t dim) {
  RowSpan span(dim);
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

/// Indices into `space` whose vectors represent a basis of
/// span(space) / span(subspace).
inline std::vector<std::size_t> quotient_basis_indices(const std::vector<DenseVector>& space,
                                                       const std::vector<DenseVector>& subspace,
                                                       std::size_t dim) {
  RowSpan space_span(dim);
  for (const auto& v : space) space_span.add(v);
  for (const auto& v : subspace)
    if (!space_span.contains(v))
      throw SubspaceNotContained("quotient_basis: subspace vector outside the space");

  RowSpan acc(dim);
  for (const auto& v : subspace) acc.add(v);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (acc.add(space[i])) picked.push_back(i);
  return picked;
}

inline std::vector<DenseVector> quotient_basis(const std::vector<DenseVector>& space,
                                               const std::vector<DenseVector>& subspace) {
  std::size_t dim = !space.empty() ? space.front().size()
                                   : (!subspace.empty() ? subspace.front().size() : 0);
  std::vector<DenseVector> out;
  for (auto i : quotient_basis_indices(space, subspace, dim)) out.push_back(space[i]);
  return out;
}

/// Coefficients c with sum_i c[i] * basis[i] == v, or nullopt when v is not
/// in the span.
inline std::optional<DenseVector> express_in_span(const std::vector<DenseVector>& basis,
                                                  const DenseVector& v) {
  const std::size_t k = basis.size();
  std::vector<SparseRow> rows(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != v.size())
        throw std::invalid_argument("express_in_span: dimension mismatch");
      if (!basis[j][r].is_zero()) rows[r].push_back({j, basis[j][r]});
    }
    if (!v[r].is_zero()) rows[r].push_back({k, v[r]});
  }
  auto e = rref(SparseMatrixQ(k + 1, std::move(rows)));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  DenseVector c(k);
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    if (const Rat* x = detail::find(e.rows[i], k)) c[e.pivots[i]] = *x;
  return c;
}

} // namespace svh
