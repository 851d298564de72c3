#pragma once

// Incremental row spans (reduced echelon bases) over the rationals, plus sum
// and intersection. This is the workhorse behind bracket-closure checks,
// orbit ranks, and span-membership tests throughout the certification layer.

#include "mobius/matrix.hpp"
#include "mobius/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mobius {

class RowSpan {
 public:
  explicit RowSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<Rat>>& basis() const { return rows_; }

  // Residual of v after elimination by the current basis; zero iff v lies in
  // the span.
  std::vector<Rat> reduce(std::vector<Rat> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("dim mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& c = v[pivots_[k]];
      if (c == 0) continue;
      const Rat f = c;  // pivot entries are normalized to 1
      for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
        if (rows_[k][j] == 0) continue;
        v[j] -= f * rows_[k][j];
      }
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    std::vector<Rat> r = reduce(v);
    for (const auto& x : r)
      if (x != 0) return false;
    return true;
  }

  // Inserts v; returns true when v enlarged the span.
  bool insert(std::vector<Rat> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && v[p] == 0) ++p;
    if (p == ambient_) return false;
    Rat inv = Rat(1) / v[p];
    for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
    // Back-eliminate the new pivot from existing rows, keep rows sorted by
    // pivot column.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat c = rows_[k][p];
      if (c == 0) continue;
      for (std::size_t j = p; j < ambient_; ++j) rows_[k][j] -= c * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  void insert_all(const std::vector<std::vector<Rat>>& vs) {
    for (const auto& v : vs) insert(v);
  }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rat>> rows_;     // reduced echelon, pivot entries 1
  std::vector<std::size_t> pivots_;
};

inline RowSpan span_of(const std::vector<std::vector<Rat>>& vs,
                       std::size_t ambient_dim) {
  RowSpan s(ambient_dim);
  s.insert_all(vs);
  return s;
}

inline RowSpan span_sum(const RowSpan& a, const RowSpan& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("dim mismatch");
  RowSpan s = a;
  s.insert_all(b.basis());
  return s;
}

// Zassenhaus: row-reduce [A A; B 0]. Rows whose left half vanished have right
// halves spanning the intersection.
inline RowSpan span_intersect(const RowSpan& a, const RowSpan& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("dim mismatch");
  const std::size_t n = a.ambient();
  Mat big(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.at(i, j) = a.basis()[i][j];
      big.at(i, n + j) = a.basis()[i][j];
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.at(a.dim() + i, j) = b.basis()[i][j];
  rref(big);
  RowSpan out(n);
  for (std::size_t i = 0; i < big.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (big.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<Rat> v(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = big.at(i, n + j);
      if (v[j] != 0) nonzero = true;
    }
    if (nonzero) out.insert(std::move(v));
  }
  return out;
}

// Span of flattened operators; ambient dimension is rows*cols of the first
// matrix.
inline RowSpan span_of_operators(const std::vector<Mat>& ops) {
  if (ops.empty()) throw std::invalid_argument("empty operator list");
  const std::size_t amb = ops.front().rows() * ops.front().cols();
  RowSpan s(amb);
  for (const auto& m : ops) s.insert(m.flatten());
  return s;
}

}  // namespace mobius
