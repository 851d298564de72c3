#pragma once

// Composition algebras by iterated Cayley-Dickson doubling, with exact
// integer structure constants: complex numbers, quaternions, and both the
// compact and the split octonions. Used for the quaternionic-form blocks,
// the 14-dimensional derivation algebra of the split octonions, and the
// Clifford-algebra generators built from left multiplications.

#include "mobius/matrix.hpp"
#include "mobius/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mobius {

// A finite-dimensional algebra with a distinguished unit e_0 and an
// involution fixing e_0 and negating the other basis vectors (the standard
// Cayley-Dickson basis makes conjugation diagonal). table[i][j] holds the
// coordinates of e_i * e_j.
struct CayleyDickson {
  std::size_t dim = 1;
  // table[i][j][k] = coefficient of e_k in e_i * e_j.
  std::vector<std::vector<std::vector<Rat>>> table;

  static CayleyDickson reals() {
    CayleyDickson a;
    a.dim = 1;
    a.table.assign(1, {{{Rat(1)}}});
    return a;
  }

  std::vector<Rat> mul(const std::vector<Rat>& x,
                       const std::vector<Rat>& y) const {
    std::vector<Rat> out(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        const Rat f = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k)
          if (table[i][j][k] != 0) out[k] += f * table[i][j][k];
      }
    }
    return out;
  }

  std::vector<Rat> conj(std::vector<Rat> x) const {
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
    return x;
  }

  std::vector<Rat> basis_vec(std::size_t i) const {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = 1;
    return v;
  }

  // Norm form N(x) = x * conj(x); diagonal in the Cayley-Dickson basis.
  // Returns the diagonal entries N(e_i).
  std::vector<Rat> norm_diagonal() const {
    std::vector<Rat> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rat> n = mul(basis_vec(i), conj(basis_vec(i)));
      for (std::size_t k = 1; k < dim; ++k)
        if (n[k] != 0) throw std::logic_error("norm form not diagonal");
      out[i] = n[0];
    }
    return out;
  }

  // Matrix of left multiplication x -> u * x.
  Mat left_mul(const std::vector<Rat>& u) const {
    Mat m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rat> col = mul(u, basis_vec(c));
      for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = col[r];
    }
    return m;
  }

  // Matrix of right multiplication x -> x * u.
  Mat right_mul(const std::vector<Rat>& u) const {
    Mat m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rat> col = mul(basis_vec(c), u);
      for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = col[r];
    }
    return m;
  }
};

// One doubling step: pairs (a,b) with (a,b)(c,d) = (ac + lambda * conj(d) b,
// d a + b conj(c)) and conjugation (a,b) -> (conj(a), -b). lambda = -1 keeps
// the norm definite (C, H, compact O); lambda = +1 splits it.
inline CayleyDickson cayley_dickson_double(const CayleyDickson& base,
                                           int lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("doubling parameter must be +-1");
  const std::size_t d = base.dim;
  CayleyDickson out;
  out.dim = 2 * d;
  out.table.assign(out.dim,
                   std::vector<std::vector<Rat>>(
                       out.dim, std::vector<Rat>(out.dim, Rat(0))));
  auto slot = [d](std::size_t idx) {
    return std::pair<std::size_t, bool>(idx % d, idx >= d);
  };
  for (std::size_t i = 0; i < out.dim; ++i) {
    auto [ia, ihi] = slot(i);
    for (std::size_t j = 0; j < out.dim; ++j) {
      auto [ja, jhi] = slot(j);
      // x = (a,b), y = (c,d) with exactly one nonzero basis slot each.
      std::vector<Rat> first(d, Rat(0)), second(d, Rat(0));
      if (!ihi && !jhi) {  // (a,0)(c,0) = (ac, 0)
        first = base.mul(base.basis_vec(ia), base.basis_vec(ja));
      } else if (!ihi && jhi) {  // (a,0)(0,d) = (0, d a)
        second = base.mul(base.basis_vec(ja), base.basis_vec(ia));
      } else if (ihi && !jhi) {  // (0,b)(c,0) = (0, b conj(c))
        second = base.mul(base.basis_vec(ia),
                          base.conj(base.basis_vec(ja)));
      } else {  // (0,b)(0,d) = (lambda * conj(d) b, 0)
        first = base.mul(base.conj(base.basis_vec(ja)),
                         base.basis_vec(ia));
        for (auto& v : first) v *= lambda;
      }
      for (std::size_t k = 0; k < d; ++k) {
        out.table[i][j][k] = first[k];
        out.table[i][j][d + k] = second[k];
      }
    }
  }
  return out;
}

inline const CayleyDickson& complex_numbers() {
  static CayleyDickson c = cayley_dickson_double(CayleyDickson::reals(), -1);
  return c;
}

inline const CayleyDickson& quaternions() {
  static CayleyDickson h = cayley_dickson_double(complex_numbers(), -1);
  return h;
}

inline const CayleyDickson& octonions() {
  static CayleyDickson o = cayley_dickson_double(quaternions(), -1);
  return o;
}

inline const CayleyDickson& split_octonions() {
  static CayleyDickson o = cayley_dickson_double(quaternions(), +1);
  return o;
}

// Derivations: all D in gl(dim) with D(xy) = D(x)y + x D(y), computed as the
// kernel of the exact linear system over the basis products. For the (split)
// octonions this is the 14-dimensional exceptional Lie algebra.
inline std::vector<Mat> derivation_algebra(const CayleyDickson& a) {
  const std::size_t d = a.dim;
  const std::size_t unknowns = d * d;  // D[r][c], row-major
  std::vector<std::vector<Rat>> rows;
  rows.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, one equation per output
      // coordinate k, linear in the entries of D.
      const auto& prod = a.table[i][j];
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rat> row(unknowns, Rat(0));
        // D(e_i e_j)_k = sum_m prod[m] * D[k][m]
        for (std::size_t m = 0; m < d; ++m)
          if (prod[m] != 0) row[k * d + m] += prod[m];
        // (D(e_i) e_j)_k = sum_m D[m][i] * (e_m e_j)_k
        for (std::size_t m = 0; m < d; ++m) {
          const Rat& c1 = a.table[m][j][k];
          if (c1 != 0) row[m * d + i] -= c1;
          const Rat& c2 = a.table[i][m][k];
          if (c2 != 0) row[m * d + j] -= c2;
        }
        bool nonzero = false;
        for (const auto& v : row)
          if (v != 0) {
            nonzero = true;
            break;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Mat> out;
  for (const auto& v : kernel_basis(Mat::from_row_vectors(rows)))
    out.push_back(Mat::unflatten(v, d, d));
  return out;
}

}  // namespace mobius
