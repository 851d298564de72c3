#pragma once

// Lie-algebra utilities on explicit matrix bases: bracket-closure checking
// (with exact structure constants), and a coordinate-tracking span used to
// express vectors in a given basis.

#include "mobius/matrix.hpp"
#include "mobius/rational.hpp"
#include "mobius/subspace.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mobius {

// Echelon span over rows [u | c] maintaining u = sum_a c[a] * generator_a, so
// membership queries also produce exact coordinates.
class CoordSpan {
 public:
  explicit CoordSpan(std::size_t ambient_dim, std::size_t n_generators)
      : amb_(ambient_dim), gens_(n_generators) {}

  std::size_t dim() const { return rows_.size(); }

  // Registers generator index g with vector v.
  bool insert_generator(const std::vector<Rat>& v, std::size_t g) {
    std::vector<Rat> c(gens_, Rat(0));
    c[g] = 1;
    return insert(v, std::move(c));
  }

  // Coordinates of v in the registered generators, or nullopt if outside.
  std::optional<std::vector<Rat>> coordinates(std::vector<Rat> v) const {
    std::vector<Rat> c(gens_, Rat(0));
    reduce(v, c);
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    for (auto& x : c) x = -x;
    return c;
  }

 private:
  void reduce(std::vector<Rat>& v, std::vector<Rat>& c) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[k]; j < amb_; ++j)
        if (rows_[k].u[j] != 0) v[j] -= f * rows_[k].u[j];
      for (std::size_t j = 0; j < gens_; ++j)
        if (rows_[k].c[j] != 0) c[j] -= f * rows_[k].c[j];
    }
  }

  bool insert(std::vector<Rat> v, std::vector<Rat> c) {
    reduce(v, c);
    std::size_t p = 0;
    while (p < amb_ && v[p] == 0) ++p;
    if (p == amb_) return false;
    const Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& x : c) x *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat f = rows_[k].u[p];
      if (f == 0) continue;
      for (std::size_t j = p; j < amb_; ++j) rows_[k].u[j] -= f * v[j];
      for (std::size_t j = 0; j < gens_; ++j) rows_[k].c[j] -= f * c[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos),
                 Row{std::move(v), std::move(c)});
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  struct Row {
    std::vector<Rat> u;
    std::vector<Rat> c;
  };
  std::size_t amb_, gens_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

struct BracketClosure {
  bool closed = false;
  // structure[i][j] = coordinates of [b_i, b_j] in the basis; filled only
  // when closed. Antisymmetric in (i, j).
  std::vector<std::vector<std::vector<Rat>>> structure;
  // When not closed: the offending pair.
  std::size_t bad_i = 0, bad_j = 0;
};

// Verifies span(b) closed under commutators; on success returns the exact
// structure constants. Throws on shape mismatch or dependent input.
inline BracketClosure bracket_closure_check(const std::vector<Mat>& b) {
  if (b.empty()) throw std::invalid_argument("empty basis");
  const std::size_t n = b.front().rows();
  for (const auto& m : b)
    if (!m.is_square() || m.rows() != n)
      throw std::invalid_argument("basis matrices not square of equal size");
  CoordSpan span(n * n, b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!span.insert_generator(b[i].flatten(), i))
      throw std::invalid_argument("basis matrices linearly dependent");

  BracketClosure out;
  const std::size_t m = b.size();
  out.structure.assign(m, std::vector<std::vector<Rat>>(
                              m, std::vector<Rat>(m, Rat(0))));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = span.coordinates(commutator(b[i], b[j]).flatten());
      if (!coords) {
        out.closed = false;
        out.bad_i = i;
        out.bad_j = j;
        out.structure.clear();
        return out;
      }
      for (std::size_t k = 0; k < m; ++k) {
        out.structure[i][j][k] = (*coords)[k];
        out.structure[j][i][k] = -(*coords)[k];
      }
    }
  }
  out.closed = true;
  return out;
}

// Verdict-only closure test (no coordinates); used by the certificate layer
// where only the gate matters.
inline bool is_bracket_closed(const std::vector<Mat>& b) {
  if (b.empty()) return true;
  RowSpan span = span_of_operators(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!span.contains(commutator(b[i], b[j]).flatten())) return false;
  return true;
}

}  // namespace mobius
