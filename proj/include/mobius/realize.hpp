#pragma once

// Exact rational matrix realizations of the candidate Lie algebras inside
// gl(N), each stored in a basis where the preserved symmetric form is
// literally diag(+1^plus, -1^minus). In that normal form X -> -X^T is a
// Cartan involution of every realized algebra, so the compact part is the
// intersection with the antisymmetric matrices and all downstream
// certificates reduce to exact rank and signature computations.

#include "mobius/liealg.hpp"
#include "mobius/matrix.hpp"
#include "mobius/octonion.hpp"
#include "mobius/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

struct Realization {
  std::string family;
  std::vector<Int> params;
  std::size_t ambient = 0;  // acting on R^ambient
  std::vector<Mat> basis;
  Mat form;  // diag(+1^plus, -1^minus)
  std::size_t plus = 0, minus = 0;
  std::vector<Rat> compact_point;  // designated rational null vector
  std::string note;
};

namespace detail {

inline Mat diag_pm(std::size_t plus, std::size_t minus) {
  Mat b(plus + minus, plus + minus);
  for (std::size_t i = 0; i < plus + minus; ++i)
    b.at(i, i) = i < plus ? 1 : -1;
  return b;
}

// A complex matrix as a pair of rational matrices Z = re + i*im.
struct CMat {
  Mat re, im;
  explicit CMat(std::size_t n) : re(n, n), im(n, n) {}
};

// Realification in the block layout (all real parts | all imaginary parts):
// Z = A + iC acts as [[A, -C], [C, A]]. Used where the complex bilinear form
// is the symmetric sum of squares, whose real part is diag(I, -I) in this
// layout.
inline Mat realify_split(const CMat& z) {
  const std::size_t n = z.re.rows();
  Mat out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = z.re.at(i, j);
      out.at(n + i, n + j) = z.re.at(i, j);
      out.at(i, n + j) = -z.im.at(i, j);
      out.at(n + i, j) = z.im.at(i, j);
    }
  return out;
}

// Realification in the per-coordinate layout: complex coordinate j becomes
// the adjacent real pair (2j, 2j+1), so a diagonal Hermitian form becomes
// the diagonal real form with each sign doubled. Conjugate transpose maps to
// transpose.
inline Mat realify_paired(const CMat& z) {
  const std::size_t n = z.re.rows();
  Mat out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.at(2 * i, 2 * j) = z.re.at(i, j);
      out.at(2 * i + 1, 2 * j + 1) = z.re.at(i, j);
      out.at(2 * i, 2 * j + 1) = -z.im.at(i, j);
      out.at(2 * i + 1, 2 * j) = z.im.at(i, j);
    }
  return out;
}

// A quaternionic matrix as four rational matrices Z = a + bi + cj + dk,
// realified with each quaternionic coordinate a block of four real ones via
// left multiplication; quaternionic conjugate transpose maps to transpose.
struct QMat {
  Mat a, b, c, d;
  explicit QMat(std::size_t n) : a(n, n), b(n, n), c(n, n), d(n, n) {}
};

inline Mat realify_quat(const QMat& z) {
  const CayleyDickson& h = quaternions();
  const Mat l1 = h.left_mul(h.basis_vec(0));
  const Mat li = h.left_mul(h.basis_vec(1));
  const Mat lj = h.left_mul(h.basis_vec(2));
  const Mat lk = h.left_mul(h.basis_vec(3));
  const std::size_t n = z.a.rows();
  Mat out(4 * n, 4 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
          Rat v = z.a.at(i, j) * l1.at(r, c) + z.b.at(i, j) * li.at(r, c) +
                  z.c.at(i, j) * lj.at(r, c) + z.d.at(i, j) * lk.at(r, c);
          if (v != 0) out.at(4 * i + r, 4 * j + c) = v;
        }
  return out;
}

inline Realization finalize(std::string family, std::vector<Int> params,
                            std::vector<Mat> basis, std::size_t plus,
                            std::size_t minus, std::size_t expected_dim,
                            std::string note = "") {
  Realization r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.basis = std::move(basis);
  r.plus = plus;
  r.minus = minus;
  r.ambient = plus + minus;
  r.form = diag_pm(plus, minus);
  r.note = std::move(note);
  if (r.basis.size() != expected_dim)
    throw std::logic_error(r.family + ": basis size " +
                           std::to_string(r.basis.size()) + " != expected " +
                           std::to_string(expected_dim));
  for (const auto& x : r.basis) {
    if (x.rows() != r.ambient || x.cols() != r.ambient)
      throw std::logic_error(r.family + ": ambient size mismatch");
    Mat skew = x.transpose() * r.form + r.form * x;
    if (!skew.is_zero())
      throw std::logic_error(r.family + ": basis element not form-skew");
  }
  if (!is_bracket_closed(r.basis))
    throw std::logic_error(r.family + ": basis not bracket-closed");
  r.compact_point.assign(r.ambient, Rat(0));
  r.compact_point[0] = 1;
  r.compact_point[r.plus] = 1;
  return r;
}

// Conjugates every basis element by the orthogonal transition that brings a
// signed-permutation ambient form to sorted diagonal shape.
inline std::vector<Mat> align_to_unit_form(const std::vector<Mat>& basis,
                                           const Mat& raw_form,
                                           std::size_t& plus,
                                           std::size_t& minus) {
  UnitDiagonalizer d = orthogonal_unit_diagonalizer(raw_form);
  plus = d.pos;
  minus = d.neg;
  Mat tt = d.t.transpose();
  std::vector<Mat> out;
  out.reserve(basis.size());
  for (const auto& x : basis) out.push_back(tt * x * d.t);
  return out;
}

}  // namespace detail

// --- The full pseudo-orthogonal algebra so(p1, q1). --------------------------
inline Realization standard_so_basis(std::size_t p1, std::size_t q1) {
  if (p1 + q1 < 3) throw std::invalid_argument("so: ambient dimension < 3");
  const std::size_t n = p1 + q1;
  std::vector<Mat> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const bool same_block = (j < p1) == (k < p1);
      Mat m(n, n);
      m.at(j, k) = 1;
      m.at(k, j) = same_block ? Rat(-1) : Rat(1);
      basis.push_back(std::move(m));
    }
  return detail::finalize("so", {Int(p1), Int(q1)}, std::move(basis), p1, q1,
                          n * (n - 1) / 2);
}

// --- The block subalgebra so(p1) + so(q1) (reducible ambient action). --------
inline Realization block_so_basis(std::size_t p1, std::size_t q1) {
  if (p1 < 2 || q1 < 2)
    throw std::invalid_argument("block: both blocks need dimension >= 2");
  const std::size_t n = p1 + q1;
  std::vector<Mat> basis;
  auto add_block = [&](std::size_t off, std::size_t sz) {
    for (std::size_t j = 0; j < sz; ++j)
      for (std::size_t k = j + 1; k < sz; ++k) {
        Mat m(n, n);
        m.at(off + j, off + k) = 1;
        m.at(off + k, off + j) = -1;
        basis.push_back(std::move(m));
      }
  };
  add_block(0, p1);
  add_block(p1, q1);
  return detail::finalize("block", {Int(p1), Int(q1)}, std::move(basis), p1,
                          q1, p1 * (p1 - 1) / 2 + q1 * (q1 - 1) / 2,
                          "reducible block sum acting on R^(p1+q1)");
}

// --- su(a, b), realified; preserves the real part of the Hermitian form. ----
inline Realization su_realification(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  if (n < 2) throw std::invalid_argument("su: rank too small");
  auto sign = [a](std::size_t j) { return j < a ? 1 : -1; };
  std::vector<Mat> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rat s(sign(j) * sign(k));
      detail::CMat x(n), y(n);
      x.re.at(j, k) = 1;
      x.re.at(k, j) = -s;
      y.im.at(j, k) = 1;
      y.im.at(k, j) = s;
      basis.push_back(detail::realify_paired(x));
      basis.push_back(detail::realify_paired(y));
    }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    detail::CMat t(n);
    t.im.at(j, j) = 1;
    t.im.at(j + 1, j + 1) = -1;
    basis.push_back(detail::realify_paired(t));
  }
  return detail::finalize("su", {Int(a), Int(b)}, std::move(basis), 2 * a,
                          2 * b, n * n - 1);
}

namespace detail {

inline std::vector<Mat> sp_quaternionic_basis(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  auto sign = [a](std::size_t j) { return j < a ? 1 : -1; };
  std::vector<Mat> basis;
  // Off-diagonal: alpha e_jk - conj(alpha) * s * e_kj for alpha in 1,i,j,k.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rat s(sign(j) * sign(k));
      for (int unit = 0; unit < 4; ++unit) {
        QMat z(n);
        Mat* slot[4] = {&z.a, &z.b, &z.c, &z.d};
        slot[unit]->at(j, k) = 1;
        // conj negates the imaginary units.
        slot[unit]->at(k, j) = (unit == 0 ? -s : s);
        basis.push_back(realify_quat(z));
      }
    }
  // Diagonal: imaginary units.
  for (std::size_t j = 0; j < n; ++j)
    for (int unit = 1; unit < 4; ++unit) {
      QMat z(n);
      Mat* slot[4] = {&z.a, &z.b, &z.c, &z.d};
      slot[unit]->at(j, j) = 1;
      basis.push_back(realify_quat(z));
    }
  return basis;
}

}  // namespace detail

// --- sp(a, b), realified quaternionic form. ----------------------------------
inline Realization sp_realification(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  if (n < 1) throw std::invalid_argument("sp: empty");
  return detail::finalize("sp", {Int(a), Int(b)},
                          detail::sp_quaternionic_basis(a, b), 4 * a, 4 * b,
                          n * (2 * n + 1));
}

// --- sp(1) + sp(a, b): adds the commuting right scalar multiplications. -----
inline Realization sp1_sp_realification(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  if (n < 1) throw std::invalid_argument("sp1sp: empty");
  std::vector<Mat> basis;
  const CayleyDickson& h = quaternions();
  for (int unit = 1; unit < 4; ++unit) {
    Mat r = h.right_mul(h.basis_vec(static_cast<std::size_t>(unit)));
    Mat big(4 * n, 4 * n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          big.at(4 * c + i, 4 * c + j) = r.at(i, j);
    basis.push_back(std::move(big));
  }
  for (auto& m : detail::sp_quaternionic_basis(a, b))
    basis.push_back(std::move(m));
  return detail::finalize("sp1sp", {Int(a), Int(b)}, std::move(basis), 4 * a,
                          4 * b, 3 + n * (2 * n + 1));
}

// --- so(n, C) realified inside so(n, n). -------------------------------------
inline Realization so_complex_realification(std::size_t n) {
  if (n < 2) throw std::invalid_argument("soc: rank too small");
  std::vector<Mat> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      detail::CMat x(n), y(n);
      x.re.at(j, k) = 1;
      x.re.at(k, j) = -1;
      y.im.at(j, k) = 1;
      y.im.at(k, j) = -1;
      basis.push_back(detail::realify_split(x));
      basis.push_back(detail::realify_split(y));
    }
  return detail::finalize("soc", {Int(n)}, std::move(basis), n, n,
                          n * (n - 1),
                          "complex orthogonal algebra on the real part of "
                          "the sum-of-squares form");
}

namespace detail {

// The two commuting 3-dimensional complex factors of so(4, C): self-dual and
// anti-self-dual combinations of the elementary rotations.
inline std::vector<CMat> so4c_factor(bool self_dual) {
  auto l = [](std::size_t j, std::size_t k) {
    CMat m(4);
    m.re.at(j, k) = 1;
    m.re.at(k, j) = -1;
    return m;
  };
  auto combine = [](CMat x, const CMat& y, int sgn) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        x.re.at(i, j) += sgn * y.re.at(i, j);
    return x;
  };
  const int s = self_dual ? 1 : -1;
  std::vector<CMat> out;
  out.push_back(combine(l(0, 1), l(2, 3), s));
  out.push_back(combine(l(0, 2), l(1, 3), -s));
  out.push_back(combine(l(0, 3), l(1, 2), s));
  return out;
}

}  // namespace detail

// --- sl(2,C) + sl(2,C) realified: the full so(4, C) inside so(4, 4). --------
inline Realization sl2c_pair_realification() {
  Realization r = so_complex_realification(4);
  r.family = "sl2csl2c";
  r.params.clear();
  r.note =
      "two realified sl(2,C) summands = so(4,C) acting on the real part of "
      "the sum-of-squares form";
  return r;
}

// --- su(2) + sl(2,C): compact first factor of so(4,C), full second. ---------
inline Realization su2_sl2c_realification() {
  std::vector<Mat> basis;
  for (const auto& z : detail::so4c_factor(true))
    basis.push_back(detail::realify_split(z));  // real span: compact su(2)
  for (const auto& z : detail::so4c_factor(false)) {
    basis.push_back(detail::realify_split(z));
    detail::CMat iz(4);
    iz.im = z.re;
    basis.push_back(detail::realify_split(iz));
  }
  return detail::finalize("su2sl2c", {}, std::move(basis), 4, 4, 9,
                          "compact factor of so(4,C) plus the full realified "
                          "complementary factor");
}

namespace detail {

inline void assert_clifford(const std::vector<Mat>& gammas,
                            const std::vector<int>& eta) {
  const std::size_t n = gammas.front().rows();
  Mat id(n, n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
  for (std::size_t a = 0; a < gammas.size(); ++a)
    for (std::size_t b = a; b < gammas.size(); ++b) {
      Mat anti = gammas[a] * gammas[b] + gammas[b] * gammas[a];
      Mat want(n, n);
      if (a == b) want = Rat(2 * eta[a]) * id;
      if (!(anti - want).is_zero())
        throw std::logic_error("Clifford relation violated");
    }
}

}  // namespace detail

// --- spin(3,4): the 8-dimensional real spin representation. ------------------
// Seven anticommuting gamma matrices from the standard tensor-product ladder
// (entries 0, +-1), then the commutator algebra, aligned so the preserved
// split form becomes diag(1^4, -1^4).
inline Realization spin34_realification() {
  Mat i2(2, 2), x2(2, 2), y2(2, 2), z2(2, 2);
  i2.at(0, 0) = 1;
  i2.at(1, 1) = 1;
  x2.at(0, 1) = 1;
  x2.at(1, 0) = 1;
  y2.at(0, 1) = -1;
  y2.at(1, 0) = 1;
  z2.at(0, 0) = 1;
  z2.at(1, 1) = -1;
  auto k3 = [](const Mat& a, const Mat& b, const Mat& c) {
    return kron(kron(a, b), c);
  };
  std::vector<Mat> g = {k3(x2, i2, i2), k3(y2, i2, i2), k3(z2, x2, i2),
                        k3(z2, y2, i2), k3(z2, z2, x2), k3(z2, z2, y2),
                        k3(z2, z2, z2)};
  detail::assert_clifford(g, {1, -1, 1, -1, 1, -1, 1});
  std::vector<Mat> basis;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      basis.push_back(g[a] * g[b]);
  Mat raw_form = g[1] * g[3] * g[5];  // product of the negative-square gammas
  std::size_t plus = 0, minus = 0;
  basis = detail::align_to_unit_form(basis, raw_form, plus, minus);
  if (plus != 4 || minus != 4)
    throw std::logic_error("spin34: unexpected spinor form signature");
  return detail::finalize("spin34", {}, std::move(basis), plus, minus, 21,
                          "spin representation of the rank-3 split "
                          "orthogonal algebra on R^8");
}

// --- spin(1,8): the 16-dimensional real spin representation. -----------------
// Eight anticommuting gammas of square -1 from octonion left multiplications
// on O + O; the volume element provides the ninth direction and the
// preserved neutral form.
inline Realization spin18_realification() {
  const CayleyDickson& o = octonions();
  std::vector<Mat> g;
  for (std::size_t u = 1; u < 8; ++u) {
    Mat l = o.left_mul(o.basis_vec(u));
    Mat m(16, 16);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        m.at(i, 8 + j) = l.at(i, j);
        m.at(8 + i, j) = l.at(i, j);
      }
    g.push_back(std::move(m));
  }
  Mat m8(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    m8.at(i, 8 + i) = 1;
    m8.at(8 + i, i) = -1;
  }
  g.push_back(std::move(m8));
  detail::assert_clifford(g, std::vector<int>(8, -1));
  Mat omega = g[0];
  for (std::size_t a = 1; a < 8; ++a) omega = omega * g[a];
  std::vector<Mat> basis;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) basis.push_back(g[a] * g[b]);
  for (std::size_t a = 0; a < 8; ++a) basis.push_back(omega * g[a]);
  std::size_t plus = 0, minus = 0;
  basis = detail::align_to_unit_form(basis, omega, plus, minus);
  if (plus != 8 || minus != 8)
    throw std::logic_error("spin18: unexpected spinor form signature");
  return detail::finalize("spin18", {}, std::move(basis), plus, minus, 36,
                          "spin representation of the rank-4 Lorentzian "
                          "orthogonal algebra on R^16");
}

// --- g2(2): derivations of the split octonions on the imaginary part. -------
inline Realization g2_split_realization() {
  const CayleyDickson& o = split_octonions();
  std::vector<Mat> ders = derivation_algebra(o);
  if (ders.size() != 14)
    throw std::logic_error("g2: derivation space has wrong dimension");
  // Derivations kill the unit and preserve its norm-orthogonal complement,
  // so the first row and column vanish; restrict to the imaginary part and
  // order the split block (norm -1, becoming +1 after global negation)
  // before the definite block.
  const std::size_t perm[7] = {4, 5, 6, 7, 1, 2, 3};
  std::vector<Mat> basis;
  for (const auto& d : ders) {
    for (std::size_t t = 0; t < 8; ++t)
      if (d.at(0, t) != 0 || d.at(t, 0) != 0)
        throw std::logic_error("g2: derivation does not fix the unit line");
    Mat m(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = d.at(perm[i], perm[j]);
    basis.push_back(std::move(m));
  }
  return detail::finalize("g2", {}, std::move(basis), 4, 3, 14,
                          "derivation algebra of the split octonions acting "
                          "on the trace-free part");
}

// --- Dispatcher used by the command-line interface. ---------------------------
inline Realization realization(const std::string& family,
                               const std::vector<Int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family " + family + " takes " +
                                  std::to_string(k) + " parameter(s)");
  };
  auto p = [&](std::size_t i) {
    if (params[i] < 0 || params[i] > 64)
      throw std::invalid_argument("parameter out of range");
    return static_cast<std::size_t>(params[i]);
  };
  if (family == "so") {
    need(2);
    return standard_so_basis(p(0), p(1));
  }
  if (family == "block") {
    need(2);
    return block_so_basis(p(0), p(1));
  }
  if (family == "su") {
    need(2);
    return su_realification(p(0), p(1));
  }
  if (family == "sp") {
    need(2);
    return sp_realification(p(0), p(1));
  }
  if (family == "sp1sp") {
    need(2);
    return sp1_sp_realification(p(0), p(1));
  }
  if (family == "soc") {
    need(1);
    return so_complex_realification(p(0));
  }
  if (family == "sl2csl2c") {
    need(0);
    return sl2c_pair_realification();
  }
  if (family == "su2sl2c") {
    need(0);
    return su2_sl2c_realification();
  }
  if (family == "spin34") {
    need(0);
    return spin34_realification();
  }
  if (family == "spin18") {
    need(0);
    return spin18_realification();
  }
  if (family == "g2") {
    need(0);
    return g2_split_realization();
  }
  throw std::invalid_argument("unknown realization family: " + family);
}

}  // namespace mobius
