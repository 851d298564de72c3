#pragma once

// Dense exact-rational matrices plus the handful of linear-algebra kernels
// the certification pipeline relies on: Bareiss integer rank, rational RREF
// (kernel / solve / inverse), signatures of symmetric forms by congruence,
// and an orthogonal rational change of basis taking the structured bilinear
// forms produced by the realization layer to diag(+1..,-1..).

#include "mobius/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mobius {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Mat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged rows");
      std::size_t j = 0;
      for (const auto& v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  static Mat from_row_vectors(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Rat trace() const {
    Rat s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
    return s;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat& w = o.at(k, j);
          if (w == 0) continue;
          r.at(i, j) += v * w;
        }
      }
    }
    return r;
  }

  friend Mat operator*(const Rat& s, const Mat& m) {
    Mat r = m;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  std::vector<Rat> row(std::size_t i) const {
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  std::vector<Rat> col(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  // Row-major flattening; the span/kernel machinery treats operators on V as
  // vectors of length rows*cols.
  std::vector<Rat> flatten() const { return a_; }

  static Mat unflatten(const std::vector<Rat>& v, std::size_t rows,
                       std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("bad flat size");
    Mat m(rows, cols);
    m.a_ = v;
    return m;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

inline Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

inline bool is_symmetric(const Mat& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

inline bool is_antisymmetric(const Mat& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  return true;
}

inline std::vector<Rat> mul_vec(const Mat& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("shape mismatch");
  std::vector<Rat> r(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) == 0 || v[j] == 0) continue;
      r[i] += m.at(i, j) * v[j];
    }
  return r;
}

inline Mat hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat rows mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

inline Mat vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat cols mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

inline Mat block_diag(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// Rank: one-step Bareiss (fraction-free) on a denominator-cleared integer
// copy. Every intermediate entry is a minor of the cleared matrix, so the
// divisions below are exact and entry growth stays polynomial.
// ---------------------------------------------------------------------------

inline std::size_t rank(const Mat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<Int>> w(r, std::vector<Int>(c));
  for (std::size_t i = 0; i < r; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < c; ++j)
      lcm = boost::multiprecision::lcm(lcm, rat_den(m.at(i, j)));
    for (std::size_t j = 0; j < c; ++j) {
      Rat v = m.at(i, j) * lcm;
      w[i][j] = rat_num(v);
    }
  }
  Int prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && w[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(w[p], w[rk]);
    for (std::size_t i = rk + 1; i < r; ++i) {
      const bool zi = (w[i][col] == 0);
      for (std::size_t j = col + 1; j < c; ++j) {
        if (w[i][j] == 0 && (zi || w[rk][j] == 0)) continue;
        w[i][j] = (w[rk][col] * w[i][j] - w[i][col] * w[rk][j]) / prev;
      }
      w[i][col] = 0;
    }
    prev = w[rk][col];
    ++rk;
  }
  return rk;
}

// ---------------------------------------------------------------------------
// Rational reduced row echelon form. Returns the pivot columns; `m` is
// modified in place.
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of { x : m x = 0 }, one vector per free column.
inline std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, or nullopt when inconsistent (free variables are
// set to zero).
inline std::optional<std::vector<Rat>> solve(const Mat& m,
                                             const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug.at(k, m.cols());
  return x;
}

inline Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square");
  const std::size_t n = m.rows();
  Mat aug = hcat(m, Mat::identity(n));
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::domain_error("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Signature of a symmetric bilinear form by rational congruence
// diagonalization. Zero diagonal pivots are repaired with the
// characteristic-zero trick e_k += e_j (which makes the new diagonal entry
// 2*m[k][j] != 0).
// ---------------------------------------------------------------------------

struct Signature {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

inline Signature signature(const Mat& form) {
  if (!is_symmetric(form)) throw std::invalid_argument("form not symmetric");
  Mat m = form;
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && m.at(j, j) == 0) ++j;
      if (j < n) {
        for (std::size_t t = 0; t < n; ++t) std::swap(m.at(k, t), m.at(j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(m.at(t, k), m.at(t, j));
      }
    }
    if (m.at(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && m.at(k, j) == 0) ++j;
      if (j == n) {
        ++sig.zero;
        continue;
      }
      for (std::size_t t = 0; t < n; ++t) m.at(k, t) += m.at(j, t);
      for (std::size_t t = 0; t < n; ++t) m.at(t, k) += m.at(t, j);
    }
    const Rat d = m.at(k, k);
    if (d > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) / d;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) m.at(k, j) = 0;
    for (std::size_t i = k + 1; i < n; ++i) m.at(i, k) = 0;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Orthogonal unit-diagonalization of structured ambient forms.
//
// The realization layer only ever produces symmetric forms that are signed
// permutation matrices (diagonal +-1 entries, hyperbolic 2-cycles, or a mix).
// For these a rational ORTHOGONAL change of basis t (t^T t = 1) with
// t^T B t = diag(1^pos, -1^neg) exists whenever the number of 2-cycles is
// even: each cycle {i,j} yields e_i+e_j, e_i-e_j of B-norm +-2, and
// same-sign pairs of those merge via half sum/difference to unit vectors.
// Orthogonality matters because conjugation by t then preserves matrix
// symmetry, keeping the compact/noncompact split of a realized subalgebra
// aligned with X -> -X^T.
// ---------------------------------------------------------------------------

struct UnitDiagonalizer {
  Mat t;            // columns form the new basis; t^T t = identity
  std::size_t pos = 0, neg = 0;
};

inline UnitDiagonalizer orthogonal_unit_diagonalizer(const Mat& form) {
  if (!is_symmetric(form))
    throw std::invalid_argument("ambient form not symmetric");
  const std::size_t n = form.rows();
  // Signed-permutation check: exactly one +-1 entry per row/column.
  std::vector<std::size_t> partner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = form.at(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1)
        throw std::domain_error("ambient form entry not in {0,+1,-1}");
      if (partner[i] != n)
        throw std::domain_error("ambient form row has two nonzero entries");
      partner[i] = j;
    }
    if (partner[i] == n)
      throw std::domain_error("ambient form is degenerate");
  }

  struct Entry {
    std::vector<Rat> v;
    int sign;
  };
  std::vector<Entry> units;
  std::vector<Entry> twos_pos, twos_neg;
  std::vector<bool> seen(n, false);
  auto basis_vec = [n](std::size_t i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    std::size_t j = partner[i];
    if (j == i) {
      units.push_back({basis_vec(i), form.at(i, i) > 0 ? +1 : -1});
      continue;
    }
    seen[j] = true;
    const int s = form.at(i, j) > 0 ? +1 : -1;
    std::vector<Rat> sum = basis_vec(i), dif = basis_vec(i);
    sum[j] = 1;
    dif[j] = -1;
    // B(sum,sum) = 2s, B(dif,dif) = -2s.
    (s > 0 ? twos_pos : twos_neg).push_back({std::move(sum), +1});
    (s > 0 ? twos_neg : twos_pos).push_back({std::move(dif), -1});
  }
  auto merge_pairs = [n](std::vector<Entry>& twos, int sign,
                         std::vector<Entry>& out) {
    if (twos.size() % 2 != 0)
      throw std::domain_error("odd hyperbolic count: no orthogonal rational "
                              "unit diagonalization");
    for (std::size_t k = 0; k + 1 < twos.size(); k += 2) {
      std::vector<Rat> a(n), b(n);
      for (std::size_t t = 0; t < n; ++t) {
        a[t] = (twos[k].v[t] + twos[k + 1].v[t]) / 2;
        b[t] = (twos[k].v[t] - twos[k + 1].v[t]) / 2;
      }
      out.push_back({std::move(a), sign});
      out.push_back({std::move(b), sign});
    }
  };
  merge_pairs(twos_pos, +1, units);
  merge_pairs(twos_neg, -1, units);

  std::stable_sort(units.begin(), units.end(),
                   [](const Entry& a, const Entry& b) { return a.sign > b.sign; });
  UnitDiagonalizer out;
  out.t = Mat(n, n);
  for (std::size_t c = 0; c < units.size(); ++c) {
    if (units[c].sign > 0)
      ++out.pos;
    else
      ++out.neg;
    for (std::size_t r = 0; r < n; ++r) out.t.at(r, c) = units[c].v[r];
  }
  return out;
}

}  // namespace mobius
