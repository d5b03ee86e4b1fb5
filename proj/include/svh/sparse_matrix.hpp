#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "svh/rational.hpp"

namespace svh {

using DenseVector = std::vector<Rat>;

struct SparseEntry {
  std::size_t col;
  Rat value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

namespace detail {

inline void canonicalize(SparseRow& row) {
  std::stable_sort(row.begin(), row.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
    if (out.back().value.is_zero()) out.pop_back();
  }
  row = std::move(out);
}

inline const Rat* find(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

// a - factor * b
inline SparseRow axpy(const SparseRow& a, const Rat& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->col < ib->col)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->col < ia->col) {
      out.push_back({ib->col, -(factor * ib->value)});
      ++ib;
    } else {
      Rat v = ia->value - factor * ib->value;
      if (!v.is_zero()) out.push_back({ia->col, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline void scale(SparseRow& row, const Rat& factor) {
  for (auto& e : row) e.value *= factor;
}

} // namespace detail

/// Row-major sparse matrix over the rationals.
class SparseMatrixQ {
public:
  SparseMatrixQ() = default;

  static SparseMatrixQ zeros(std::size_t rows, std::size_t cols) {
    return SparseMatrixQ(cols, std::vector<SparseRow>(rows));
  }

  /// Takes arbitrary (unsorted, possibly duplicated, possibly zero) entries
  /// and stores them canonically.
  explicit SparseMatrixQ(std::size_t cols, std::vector<SparseRow> rows = {}) : cols_(cols), rows_(std::move(rows)) {
    for (auto& r : rows_) {
      detail::canonicalize(r);
      if (!r.empty() && r.back().col >= cols_)
        throw std::out_of_range("SparseMatrixQ: column index out of range");
    }
  }

  static SparseMatrixQ from_dense(const std::vector<DenseVector>& rows, std::size_t cols) {
    std::vector<SparseRow> sparse;
    sparse.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("SparseMatrixQ: ragged dense input");
      SparseRow row;
      for (std::size_t c = 0; c < cols; ++c)
        if (!r[c].is_zero()) row.push_back({c, r[c]});
      sparse.push_back(std::move(row));
    }
    return SparseMatrixQ(cols, std::move(sparse));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const SparseRow& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<SparseRow>& row_data() const noexcept { return rows_; }

  void append_row(SparseRow row) {
    detail::canonicalize(row);
    if (!row.empty() && row.back().col >= cols_)
      throw std::out_of_range("SparseMatrixQ: column index out of range");
    rows_.push_back(std::move(row));
  }

  Rat at(std::size_t r, std::size_t c) const {
    const Rat* v = detail::find(rows_.at(r), c);
    return v ? *v : Rat(0);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  DenseVector multiply(const DenseVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("SparseMatrixQ: dimension mismatch");
    DenseVector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& e : rows_[i]) y[i] += e.value * x[e.col];
    return y;
  }

  std::vector<DenseVector> to_dense() const {
    std::vector<DenseVector> out(rows_.size(), DenseVector(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& e : rows_[i]) out[i][e.col] = e.value;
    return out;
  }

  friend bool operator==(const SparseMatrixQ&, const SparseMatrixQ&) = default;

private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

inline bool is_zero(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

} // namespace svh
