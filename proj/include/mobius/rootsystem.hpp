#pragma once

// Root systems for the simple series A-D and G2: Cartan matrices, positive
// roots by string closure, the Weyl dimension formula, dual (contragredient)
// highest weights, and the symmetric/antisymmetric invariant-form parity.
//
// Conventions, used consistently across the library:
//   cartan[i][j] = 2(a_i, a_j)/(a_i, a_i)  — so column j of the Cartan matrix
//   is simple root a_j written in fundamental-weight coordinates. Weights are
//   integer vectors in the fundamental-weight basis. The symmetrizer d_i =
//   (a_i, a_i)/2 is normalized to smallest positive integers per system.

#include "mobius/matrix.hpp"
#include "mobius/rational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct RootSystemType {
  Series series;
  int rank;

  bool operator==(const RootSystemType&) const = default;
  auto operator<=>(const RootSystemType&) const = default;

  std::string str() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
  }
};

// Parses "B4", "A1", "G2" style labels.
inline RootSystemType parse_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad type: " + std::string(text));
  const char s = text[0];
  if (s != 'A' && s != 'B' && s != 'C' && s != 'D' && s != 'G')
    throw std::invalid_argument("unknown series: " + std::string(text));
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad rank: " + std::string(text));
    rank = rank * 10 + (text[i] - '0');
  }
  return {static_cast<Series>(s), rank};
}

struct Weight {
  std::vector<Int> coords;  // fundamental-weight basis

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& c : coords)
      if (c < 0) return false;
    return true;
  }
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ",";
      out += coords[i].str();
    }
    return out + ")";
  }
};

inline Weight fundamental_weight(int rank, int i) {
  Weight w{std::vector<Int>(rank, Int(0))};
  w.coords[i] = 1;
  return w;
}

class RootSystem {
 public:
  explicit RootSystem(RootSystemType type) : type_(type) {
    build_cartan();
    build_symmetrizer();
    close_roots();
    build_coroots();
  }

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<Int>>& cartan() const { return a_; }
  const std::vector<Int>& symmetrizer() const { return d_; }
  // Positive roots in simple-root coordinates, sorted by (height, coords).
  const std::vector<std::vector<Int>>& positive_roots() const { return roots_; }
  // Matching coroots in the basis of simple coroots: for a = sum k_i a_i,
  // coroot coords c_i = k_i d_i / d_a (always integers).
  const std::vector<std::vector<Int>>& positive_coroots() const {
    return coroots_;
  }

  Weight weyl_vector() const {
    return Weight{std::vector<Int>(type_.rank, Int(1))};
  }

  // <w, a^vee> for a positive root indexed r.
  Int pair_coroot(const Weight& w, std::size_t r) const {
    check(w);
    Int acc = 0;
    for (int i = 0; i < type_.rank; ++i) acc += w.coords[i] * coroots_[r][i];
    return acc;
  }

  // Exact Weyl dimension: prod_{a>0} <w+rho, a^vee> / <rho, a^vee>.
  Int weyl_dim(const Weight& w) const {
    check(w);
    if (!w.is_dominant()) throw std::invalid_argument("weight not dominant");
    Int num = 1, den = 1;
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      Int top = 0, bot = 0;
      for (int i = 0; i < type_.rank; ++i) {
        top += (w.coords[i] + 1) * coroots_[r][i];
        bot += coroots_[r][i];
      }
      num *= top;
      den *= bot;
    }
    if (num % den != 0) throw std::logic_error("non-integer dimension");
    return num / den;
  }

  // Dominant representative of a weight under the Weyl group.
  Weight dominant_rep(Weight w) const {
    check(w);
    for (;;) {
      int neg = -1;
      for (int i = 0; i < type_.rank && neg < 0; ++i)
        if (w.coords[i] < 0) neg = i;
      if (neg < 0) return w;
      const Int c = w.coords[neg];
      for (int j = 0; j < type_.rank; ++j) w.coords[j] -= c * a_[j][neg];
    }
  }

  // Highest weight of the dual module: -w0(w), by dominance reduction of -w.
  Weight dual_weight(const Weight& w) const {
    check(w);
    if (!w.is_dominant()) throw std::invalid_argument("weight not dominant");
    Weight m = w;
    for (auto& c : m.coords) c = -c;
    return dominant_rep(std::move(m));
  }

  bool self_dual(const Weight& w) const { return dual_weight(w) == w; }

  enum class FormParity { orthogonal, symplectic };

  // For self-dual w: parity of <w, sum of positive coroots> decides whether
  // the invariant bilinear form is symmetric or antisymmetric.
  FormParity form_parity(const Weight& w) const {
    check(w);
    if (!self_dual(w))
      throw std::invalid_argument("form parity of non-self-dual weight");
    Int acc = 0;
    for (std::size_t r = 0; r < roots_.size(); ++r) acc += pair_coroot(w, r);
    return acc % 2 == 0 ? FormParity::orthogonal : FormParity::symplectic;
  }

 private:
  void check(const Weight& w) const {
    if (static_cast<int>(w.coords.size()) != type_.rank)
      throw std::invalid_argument("weight rank mismatch");
  }

  void build_cartan() {
    const int n = type_.rank;
    auto need = [&](bool ok) {
      if (!ok)
        throw std::invalid_argument("invalid rank for series " + type_.str());
    };
    a_.assign(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) a_[i][i] = 2;
    auto chain = [&](int i, int j) { a_[i][j] = -1; a_[j][i] = -1; };
    switch (type_.series) {
      case Series::A:
        need(n >= 1);
        for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
        break;
      case Series::B:
        need(n >= 2);
        for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
        a_[n - 1][n - 2] = -2;  // a_{n-1} short
        break;
      case Series::C:
        need(n >= 2);
        for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
        a_[n - 2][n - 1] = -2;  // a_{n-1} long
        break;
      case Series::D:
        need(n >= 3);
        for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
        chain(n - 3, n - 1);
        break;
      case Series::G:
        need(n == 2);
        a_[0][1] = -3;  // node 0 short
        a_[1][0] = -1;
        break;
    }
  }

  void build_symmetrizer() {
    const int n = type_.rank;
    std::vector<Rat> dr(n, Rat(0));
    dr[0] = 1;
    for (int pass = 0; pass < n; ++pass)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || a_[i][j] == 0 || dr[i] == 0) continue;
          dr[j] = dr[i] * a_[i][j] / a_[j][i];
        }
    Int lcm = 1;
    for (auto& x : dr) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
    Int g = 0;
    for (auto& x : dr) {
      x *= lcm;
      g = boost::multiprecision::gcd(g, rat_num(x));
    }
    d_.resize(n);
    for (int i = 0; i < n; ++i) d_[i] = rat_num(dr[i]) / g;
  }

  void close_roots() {
    const int n = type_.rank;
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier;
    for (int i = 0; i < n; ++i) {
      std::vector<Int> e(n, Int(0));
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    auto pairing = [&](const std::vector<Int>& k, int i) {
      Int v = 0;
      for (int j = 0; j < n; ++j) v += a_[i][j] * k[j];
      return v;
    };
    while (!frontier.empty()) {
      std::vector<std::vector<Int>> next;
      for (const auto& k : frontier) {
        for (int i = 0; i < n; ++i) {
          Int p = 0;
          std::vector<Int> down = k;
          for (;;) {
            down[i] -= 1;
            bool ok = down[i] >= 0 && seen.count(down) > 0;
            if (!ok) break;
            p += 1;
          }
          if (p - pairing(k, i) > 0) {
            std::vector<Int> up = k;
            up[i] += 1;
            if (seen.insert(up).second) next.push_back(up);
          }
        }
      }
      frontier = std::move(next);
    }
    roots_.assign(seen.begin(), seen.end());
    std::sort(roots_.begin(), roots_.end(),
              [](const std::vector<Int>& x, const std::vector<Int>& y) {
                Int hx = 0, hy = 0;
                for (const auto& v : x) hx += v;
                for (const auto& v : y) hy += v;
                if (hx != hy) return hx < hy;
                return x < y;
              });
  }

  void build_coroots() {
    coroots_.reserve(roots_.size());
    for (const auto& k : roots_) {
      // (a,a)/2 from the Gram matrix G_ij = d_i a_ij.
      Int norm2 = 0;
      for (int i = 0; i < type_.rank; ++i)
        for (int j = 0; j < type_.rank; ++j)
          norm2 += k[i] * d_[i] * a_[i][j] * k[j];
      if (norm2 % 2 != 0) throw std::logic_error("odd root norm");
      const Int da = norm2 / 2;
      std::vector<Int> c(type_.rank);
      for (int i = 0; i < type_.rank; ++i) {
        const Int num = k[i] * d_[i];
        if (num % da != 0) throw std::logic_error("non-integer coroot");
        c[i] = num / da;
      }
      coroots_.push_back(std::move(c));
    }
  }

  RootSystemType type_;
  std::vector<std::vector<Int>> a_;
  std::vector<Int> d_;
  std::vector<std::vector<Int>> roots_;
  std::vector<std::vector<Int>> coroots_;
};

// Closed-form positive-root counts, used as an independent structural check.
inline std::size_t expected_positive_roots(RootSystemType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::G: return 6;
  }
  throw std::logic_error("unreachable");
}

}  // namespace mobius
