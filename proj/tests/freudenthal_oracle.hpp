#pragma once

// Independent dimension oracle for highest-weight modules, used to validate
// the library's Weyl-product dimension formula. Deliberately self-contained:
// it builds its own Cartan matrices, its own positive-root closure, its own
// symmetrizer, and computes dimensions by summing weight multiplicities from
// the Freudenthal recursion over the dominant chamber — no code shared with
// the library's root-system machinery beyond the exact-arithmetic substrate.
//
// Conventions: weights live in fundamental-weight coordinates (row vectors of
// integers); cartan[i][j] = 2(a_i, a_j)/(a_i, a_i), so column j of the Cartan
// matrix is simple root a_j expressed in fundamental-weight coordinates.

#include "mobius/matrix.hpp"
#include "mobius/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace freudenthal_oracle {

using mobius::Int;
using mobius::Mat;
using mobius::Rat;

struct System {
  int n = 0;
  std::vector<std::vector<Int>> a;      // Cartan matrix
  std::vector<Int> d;                   // symmetrizer: d_i * a_ij = d_j * a_ji
  std::vector<std::vector<Int>> roots;  // positive roots, simple-root coords
  Mat ainv;                             // inverse Cartan (rational)
};

inline System build(char series, int rank) {
  System s;
  s.n = rank;
  auto& a = s.a;
  a.assign(rank, std::vector<Int>(rank, Int(0)));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (series) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A rank");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("B rank");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      a[rank - 1][rank - 2] = -2;  // last root short
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("C rank");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      a[rank - 2][rank - 1] = -2;  // last root long
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("D rank");
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      chain(rank - 3, rank - 1);
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G rank");
      a[0][1] = -3;  // node 0 short
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown series");
  }

  // Symmetrizer by propagation along the (connected) diagram.
  std::vector<Rat> dr(rank, Rat(0));
  dr[0] = 1;
  for (int pass = 0; pass < rank; ++pass)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i == j || a[i][j] == 0 || dr[i] == 0) continue;
        dr[j] = dr[i] * a[i][j] / a[j][i];
      }
  Int lcm = 1;
  for (auto& x : dr) lcm = boost::multiprecision::lcm(lcm, mobius::rat_den(x));
  for (auto& x : dr) x *= lcm;
  Int g = 0;
  for (auto& x : dr) g = boost::multiprecision::gcd(g, mobius::rat_num(x));
  s.d.resize(rank);
  for (int i = 0; i < rank; ++i) s.d[i] = mobius::rat_num(dr[i]) / g;

  // Positive-root closure by root strings: a + a_i is a root iff
  // p - <a, a_i^vee> > 0 where p = down-string length.
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<Int> e(rank, Int(0));
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  auto pair_with_coroot = [&](const std::vector<Int>& k, int i) {
    // <sum_j k_j a_j, a_i^vee> = sum_j a_ij k_j
    Int v = 0;
    for (int j = 0; j < rank; ++j) v += a[i][j] * k[j];
    return v;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& k : frontier) {
      for (int i = 0; i < rank; ++i) {
        Int p = 0;
        std::vector<Int> down = k;
        for (;;) {
          down[i] -= 1;
          bool nonneg = true;
          for (const auto& x : down)
            if (x < 0) nonneg = false;
          if (!nonneg || !seen.count(down)) break;
          p += 1;
        }
        if (p - pair_with_coroot(k, i) > 0) {
          std::vector<Int> up = k;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  s.roots.assign(seen.begin(), seen.end());

  Mat am(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) am.at(i, j) = Rat(a[i][j]);
  s.ainv = mobius::inverse(am);
  return s;
}

// (u, v) for u in weight coords and v = sum_j k_j a_j in root coords.
inline Int pair_weight_root(const System& s, const std::vector<Int>& u,
                            const std::vector<Int>& k) {
  Int acc = 0;
  for (int j = 0; j < s.n; ++j) acc += u[j] * s.d[j] * k[j];
  return acc;
}

// (u, v) for both in weight coords; rational.
inline Rat pair_weights(const System& s, const std::vector<Int>& u,
                        const std::vector<Int>& v) {
  Rat acc = 0;
  for (int j = 0; j < s.n; ++j) {
    Rat kj = 0;
    for (int t = 0; t < s.n; ++t) kj += s.ainv.at(j, t) * Rat(v[t]);
    acc += Rat(u[j] * s.d[j]) * kj;
  }
  return acc;
}

inline std::vector<Int> to_weight_coords(const System& s,
                                         const std::vector<Int>& k) {
  std::vector<Int> u(s.n, Int(0));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) u[i] += s.a[i][j] * k[j];
  return u;
}

inline std::vector<Int> dominant_rep(const System& s, std::vector<Int> u) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < s.n && neg < 0; ++i)
      if (u[i] < 0) neg = i;
    if (neg < 0) return u;
    // simple reflection: u -= u[neg] * (column neg of cartan)
    const Int c = u[neg];
    for (int j = 0; j < s.n; ++j) u[j] -= c * s.a[j][neg];
  }
}

inline std::size_t orbit_size(const System& s, const std::vector<Int>& dom) {
  std::set<std::vector<Int>> orbit{dom};
  std::vector<std::vector<Int>> frontier{dom};
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& u : frontier)
      for (int i = 0; i < s.n; ++i) {
        if (u[i] == 0) continue;
        std::vector<Int> v = u;
        const Int c = u[i];
        for (int j = 0; j < s.n; ++j) v[j] -= c * s.a[j][i];
        if (orbit.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return orbit.size();
}

// Total dimension of the highest-weight module by Freudenthal multiplicities
// summed over Weyl orbits of dominant weights.
inline Int dimension(const System& s, const std::vector<Int>& lambda) {
  for (const auto& x : lambda)
    if (x < 0) throw std::invalid_argument("weight not dominant");

  // Box bound: root coordinates of lambda - w0(lambda).
  std::vector<Int> dual = dominant_rep(s, [&] {
    std::vector<Int> m(lambda);
    for (auto& x : m) x = -x;
    return m;
  }());
  std::vector<Int> span(s.n);  // lambda + dual(lambda) in weight coords
  for (int i = 0; i < s.n; ++i) span[i] = lambda[i] + dual[i];
  std::vector<Int> box(s.n, Int(0));
  for (int j = 0; j < s.n; ++j) {
    Rat kj = 0;
    for (int t = 0; t < s.n; ++t) kj += s.ainv.at(j, t) * Rat(span[t]);
    if (mobius::rat_den(kj) != 1 || kj < 0)
      throw std::logic_error("box bound not a nonnegative integer");
    box[j] = mobius::rat_num(kj);
  }

  // Enumerate dominant weights lambda - sum c_i a_i with 0 <= c <= box.
  struct Entry {
    std::vector<Int> c;
    std::vector<Int> u;  // weight coords
    Int level;
  };
  std::vector<Entry> dom;
  std::vector<Int> c(s.n, Int(0));
  for (;;) {
    std::vector<Int> u = lambda;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j) u[j] -= c[i] * s.a[j][i];
    bool dominant = true;
    for (const auto& x : u)
      if (x < 0) dominant = false;
    if (dominant) {
      Int lev = 0;
      for (const auto& x : c) lev += x;
      dom.push_back({c, u, lev});
    }
    int pos = 0;
    while (pos < s.n) {
      c[pos] += 1;
      if (c[pos] <= box[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == s.n) break;
  }
  std::sort(dom.begin(), dom.end(), [](const Entry& x, const Entry& y) {
    return x.level < y.level || (x.level == y.level && x.c < y.c);
  });

  std::vector<Int> rho(s.n, Int(1));
  std::vector<Int> lam_rho(s.n);
  for (int i = 0; i < s.n; ++i) lam_rho[i] = lambda[i] + rho[i];
  const Rat top_norm = pair_weights(s, lam_rho, lam_rho);

  std::map<std::vector<Int>, Int> mult;  // keyed by weight coords (dominant)
  for (const auto& e : dom) {
    if (e.level == 0) {
      mult[e.u] = 1;
      continue;
    }
    // RHS = 2 * sum_{a>0} sum_{k>=1} m(e.u + k a) * (e.u + k a, a)
    Int rhs2 = 0;
    for (const auto& root : s.roots) {
      std::vector<Int> ru = to_weight_coords(s, root);
      for (Int k = 1;; ++k) {
        std::vector<Int> up(s.n);
        for (int j = 0; j < s.n; ++j) up[j] = e.u[j] + k * ru[j];
        // outside the weight hull once lambda - up leaves the cone
        std::vector<Int> diff(s.n);
        for (int j = 0; j < s.n; ++j) diff[j] = lambda[j] - up[j];
        bool in_cone = true;
        for (int j = 0; j < s.n && in_cone; ++j) {
          Rat kj = 0;
          for (int t = 0; t < s.n; ++t) kj += s.ainv.at(j, t) * Rat(diff[t]);
          if (kj < 0) in_cone = false;
        }
        if (!in_cone) break;
        auto it = mult.find(dominant_rep(s, up));
        if (it == mult.end() || it->second == 0) continue;
        std::vector<Int> rk(s.n);
        for (int j = 0; j < s.n; ++j) rk[j] = root[j];
        rhs2 += it->second * pair_weight_root(s, up, rk);
      }
    }
    if (rhs2 == 0) {
      mult[e.u] = 0;
      continue;
    }
    std::vector<Int> mu_rho(s.n);
    for (int i = 0; i < s.n; ++i) mu_rho[i] = e.u[i] + rho[i];
    const Rat denom = top_norm - pair_weights(s, mu_rho, mu_rho);
    if (denom <= 0) throw std::logic_error("nonpositive denominator");
    const Rat m = Rat(2 * rhs2) / denom;
    if (mobius::rat_den(m) != 1 || m < 0)
      throw std::logic_error("non-integer multiplicity");
    mult[e.u] = mobius::rat_num(m);
  }

  Int total = 0;
  for (const auto& [u, m] : mult) {
    if (m == 0) continue;
    total += m * Int(orbit_size(s, u));
  }
  return total;
}

inline Int dimension(char series, int rank, const std::vector<long long>& w) {
  System s = build(series, rank);
  std::vector<Int> lam(w.begin(), w.end());
  return dimension(s, lam);
}

}  // namespace freudenthal_oracle
