#pragma once

// Compact semisimple-plus-center algebras as canonical multisets: low-rank
// isomorphisms (so(3) = su(2), so(4) = su(2)+su(2), so(5) = sp(2),
// so(6) = su(4), sp(1) = su(2), so(2) = u(1)) are always rewritten, so two
// compact algebras are isomorphic iff their canonical forms compare equal.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mobius {

struct CompactSimple {
  enum class Family { su, so, sp, g2 };
  Family family = Family::su;
  int n = 0;  // su(n) n>=2, so(n) n>=7, sp(n) n>=2; ignored for g2

  auto operator<=>(const CompactSimple&) const = default;

  long long dim() const {
    switch (family) {
      case Family::su: return static_cast<long long>(n) * n - 1;
      case Family::so: return static_cast<long long>(n) * (n - 1) / 2;
      case Family::sp: return static_cast<long long>(n) * (2 * n + 1);
      case Family::g2: return 14;
    }
    return 0;
  }

  std::string str() const {
    switch (family) {
      case Family::su: return "su(" + std::to_string(n) + ")";
      case Family::so: return "so(" + std::to_string(n) + ")";
      case Family::sp: return "sp(" + std::to_string(n) + ")";
      case Family::g2: return "g2";
    }
    return "?";
  }
};

struct CompactAlgebra {
  std::vector<CompactSimple> factors;  // kept sorted
  int center_dim = 0;

  bool operator==(const CompactAlgebra&) const = default;
  auto operator<=>(const CompactAlgebra&) const = default;

  long long dim() const {
    long long d = center_dim;
    for (const auto& f : factors) d += f.dim();
    return d;
  }

  std::string str() const {
    if (factors.empty() && center_dim == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "+";
      out += factors[i].str();
    }
    for (int i = 0; i < center_dim; ++i) {
      if (!out.empty()) out += "+";
      out += "u(1)";
    }
    return out;
  }
};

namespace detail {

inline int parse_paren_int(std::string_view s, std::string_view head) {
  // "so(12)" with head "so" -> 12
  if (s.substr(0, head.size()) != head || s.size() < head.size() + 3 ||
      s[head.size()] != '(' || s.back() != ')')
    throw std::invalid_argument("bad compact label: " + std::string(s));
  std::string num(s.substr(head.size() + 1, s.size() - head.size() - 2));
  if (num.empty() ||
      num.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad compact label: " + std::string(s));
  return std::stoi(num);
}

}  // namespace detail

// Adds one raw label ("so(5)", "su(3)", "sp(1)", "u(2)", "spin(7)", "g2")
// to the accumulating algebra, applying the low-rank rewrites.
inline void add_compact_label(CompactAlgebra& k, std::string_view label) {
  using F = CompactSimple::Family;
  auto push = [&](F f, int n) { k.factors.push_back({f, n}); };
  if (label == "g2") {
    push(F::g2, 0);
    return;
  }
  std::string_view head = label.substr(0, label.find('('));
  if (head == "spin") {
    int n = detail::parse_paren_int(label, "spin");
    add_compact_label(k, "so(" + std::to_string(n) + ")");
    return;
  }
  if (head == "u") {
    int n = detail::parse_paren_int(label, "u");
    if (n < 1) throw std::invalid_argument("bad compact label");
    k.center_dim += 1;
    if (n >= 2) add_compact_label(k, "su(" + std::to_string(n) + ")");
    return;
  }
  if (head == "su") {
    int n = detail::parse_paren_int(label, "su");
    if (n < 1) throw std::invalid_argument("bad compact label");
    if (n >= 2) push(F::su, n);
    return;
  }
  if (head == "sp") {
    int n = detail::parse_paren_int(label, "sp");
    if (n < 1) throw std::invalid_argument("bad compact label");
    if (n == 1)
      push(F::su, 2);
    else
      push(F::sp, n);
    return;
  }
  if (head == "so") {
    int n = detail::parse_paren_int(label, "so");
    switch (n) {
      case 0:
      case 1: return;
      case 2: k.center_dim += 1; return;
      case 3: push(F::su, 2); return;
      case 4: push(F::su, 2); push(F::su, 2); return;
      case 5: push(F::sp, 2); return;
      case 6: push(F::su, 4); return;
      default: push(F::so, n); return;
    }
  }
  throw std::invalid_argument("unknown compact label: " + std::string(label));
}

inline CompactAlgebra canonical_compact(const std::vector<std::string>& labels,
                                        int extra_center = 0) {
  CompactAlgebra k;
  k.center_dim = extra_center;
  for (const auto& l : labels) add_compact_label(k, l);
  std::sort(k.factors.begin(), k.factors.end());
  return k;
}

// Parses "su(2)+su(2)+u(1)" style sums (also accepts non-canonical labels
// and canonicalizes them).
inline CompactAlgebra parse_compact(std::string_view text) {
  if (text == "0" || text.empty()) return {};
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    labels.emplace_back(text.substr(start, plus - start));
    start = plus + 1;
  }
  return canonical_compact(labels);
}

}  // namespace mobius
