#pragma once

// Complex irreducible representations of semisimple algebras given as lists
// of simple factors: dimension-exact enumeration of highest weights (pruned
// by strict monotonicity of the Weyl dimension formula), and classification
// by faithfulness, self-duality, and invariant-form type.

#include "mobius/rootsystem.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

struct SemisimpleComplex {
  std::vector<RootSystemType> factors;

  bool operator==(const SemisimpleComplex&) const = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "+";
      out += factors[i].str();
    }
    return out;
  }
};

// Parses "B4" or "A1+A1" style '+'-joined factor lists.
inline SemisimpleComplex parse_semisimple(std::string_view text) {
  SemisimpleComplex a;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    a.factors.push_back(parse_type(text.substr(start, plus - start)));
    start = plus + 1;
  }
  if (a.factors.empty()) throw std::invalid_argument("empty algebra spec");
  return a;
}

struct HighestWeight {
  std::vector<Weight> per_factor;

  bool operator==(const HighestWeight&) const = default;
  auto operator<=>(const HighestWeight&) const = default;

  std::vector<Int> flat() const {
    std::vector<Int> out;
    for (const auto& w : per_factor)
      out.insert(out.end(), w.coords.begin(), w.coords.end());
    return out;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < per_factor.size(); ++i) {
      if (i) out += "x";
      out += per_factor[i].str();
    }
    return out;
  }
};

enum class FormType { orthogonal, symplectic, none };

inline std::string form_type_str(FormType f) {
  switch (f) {
    case FormType::orthogonal: return "orthogonal";
    case FormType::symplectic: return "symplectic";
    case FormType::none: return "none";
  }
  return "none";
}

struct ComplexIrrep {
  SemisimpleComplex algebra;
  HighestWeight weight;
  Int dim = 0;
  bool faithful = false;   // every factor component nonzero
  bool self_dual = false;  // every factor component self-dual
  FormType form_type = FormType::none;
};

namespace detail {

inline void check_match(const SemisimpleComplex& a, const HighestWeight& w) {
  if (a.factors.size() != w.per_factor.size())
    throw std::invalid_argument("factor/weight length mismatch");
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (static_cast<int>(w.per_factor[i].coords.size()) != a.factors[i].rank)
      throw std::invalid_argument("weight rank mismatch at factor " +
                                  std::to_string(i));
}

}  // namespace detail

inline ComplexIrrep classify_complex_irrep(const SemisimpleComplex& a,
                                           const HighestWeight& w) {
  detail::check_match(a, w);
  ComplexIrrep out;
  out.algebra = a;
  out.weight = w;
  out.dim = 1;
  out.faithful = true;
  out.self_dual = true;
  std::size_t symplectic_components = 0;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    RootSystem rs(a.factors[i]);
    const Weight& wi = w.per_factor[i];
    if (!wi.is_dominant()) throw std::invalid_argument("non-dominant weight");
    out.dim *= rs.weyl_dim(wi);
    if (wi.is_zero()) out.faithful = false;
    if (!rs.self_dual(wi)) {
      out.self_dual = false;
    } else if (rs.form_parity(wi) == RootSystem::FormParity::symplectic) {
      ++symplectic_components;
    }
  }
  out.form_type = !out.self_dual           ? FormType::none
                  : symplectic_components % 2 == 0 ? FormType::orthogonal
                                                   : FormType::symplectic;
  return out;
}

// All dominant weights of one simple factor with dimension exactly each
// divisor encountered; enumeration prunes by monotonicity of weyl_dim.
inline std::map<Int, std::vector<Weight>> weights_by_dim(const RootSystem& rs,
                                                         const Int& bound) {
  std::map<Int, std::vector<Weight>> out;
  Weight w{std::vector<Int>(rs.rank(), Int(0))};
  std::function<void(int)> rec = [&](int i) {
    const Int dim = rs.weyl_dim(w);
    if (dim > bound) return;
    if (i == rs.rank()) {
      out[dim].push_back(w);
      return;
    }
    for (;;) {
      rec(i + 1);
      w.coords[i] += 1;
      if (rs.weyl_dim(w) > bound) {
        w.coords[i] = 0;
        return;
      }
    }
  };
  rec(0);
  return out;
}

// Complete list of highest weights with product dimension exactly d, in
// lexicographic order on concatenated coordinates.
inline std::vector<HighestWeight> enumerate_dim_exact(const SemisimpleComplex& a,
                                                      const Int& d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<std::map<Int, std::vector<Weight>>> buckets;
  buckets.reserve(a.factors.size());
  for (const auto& t : a.factors)
    buckets.push_back(weights_by_dim(RootSystem(t), d));

  std::vector<HighestWeight> out;
  HighestWeight cur;
  cur.per_factor.resize(a.factors.size());
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int rem) {
    if (i == a.factors.size()) {
      if (rem == 1) out.push_back(cur);
      return;
    }
    for (const auto& [dim, weights] : buckets[i]) {
      if (dim > rem || rem % dim != 0) continue;
      for (const auto& w : weights) {
        cur.per_factor[i] = w;
        rec(i + 1, rem / dim);
      }
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const HighestWeight& x,
                                       const HighestWeight& y) {
    return x.flat() < y.flat();
  });
  return out;
}

struct CandidateSets {
  std::vector<ComplexIrrep> c_d;     // faithful, complex dimension d
  std::vector<ComplexIrrep> c_half;  // faithful, complex dimension d/2
};

inline CandidateSets candidate_sets(const SemisimpleComplex& a, const Int& d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  CandidateSets out;
  for (const auto& w : enumerate_dim_exact(a, d)) {
    ComplexIrrep ir = classify_complex_irrep(a, w);
    if (ir.faithful) out.c_d.push_back(std::move(ir));
  }
  if (d % 2 == 0) {
    for (const auto& w : enumerate_dim_exact(a, d / 2)) {
      ComplexIrrep ir = classify_complex_irrep(a, w);
      if (ir.faithful) out.c_half.push_back(std::move(ir));
    }
  }
  return out;
}

}  // namespace mobius
