#pragma once

// Catalog of the connected compact Lie groups acting transitively and
// effectively on a product of spheres S^p x S^q (p, q >= 2), recorded at
// the Lie-algebra level.  Three lists:
//
//   I   - sporadic groups tied to fixed sphere pairs (triality-type
//         actions on S^5 x S^7, S^7 x S^7, S^6 x S^7);
//   II  - products K_1 x K_2 where K_i is one of the groups transitive on
//         a single sphere S^{p_i} (rotation, unitary, quaternionic, and
//         the three sporadic sphere actions Spin(9), Spin(7), G2);
//   III - non-product actions on S^p x S^q with q in {2, 5, 7}, built
//         from unitary/quaternionic groups with an intertwined factor.
//
// Each instantiated entry carries the list id, the canonicalized compact
// algebra, and the constraint on (p,q) that admitted it.  Overlaps between
// the lists at small parameters (e.g. the q = 2 families of list III at
// p = 3 restate list III(a); Sp(1) = SU(2) makes list II(c) at p_i = 3
// repeat list II(b)) are deliberate: consumers deduplicate on the
// canonical compact algebra and join the contributing ids.

#include "mobius/compact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

struct KamerichEntry {
  std::string list_id;  // "I(b)", "II(a,c)", "III(e)"
  CompactAlgebra compact;
  std::string constraints;  // the admitting condition, human-readable

  bool operator==(const KamerichEntry&) const = default;
};

namespace detail {

// One group transitive on the single sphere S^n, as labels for
// canonical_compact, tagged with its list II letter.
struct SphereGroup {
  char letter;
  std::vector<std::string> labels;
  std::string constraint;
};

inline std::vector<SphereGroup> sphere_transitive_groups(int n) {
  std::vector<SphereGroup> out;
  out.push_back({'a', {"so(" + std::to_string(n + 1) + ")"}, "any sphere"});
  if (n % 2 == 1 && n >= 3) {
    const std::string k = std::to_string((n + 1) / 2);
    out.push_back({'b', {"su(" + k + ")"}, "odd sphere"});
    out.push_back({'b', {"u(" + k + ")"}, "odd sphere"});
  }
  if (n % 4 == 3) {
    const std::string m = std::to_string((n + 1) / 4);
    out.push_back({'c', {"sp(" + m + ")"}, "sphere 3 mod 4"});
    out.push_back({'c', {"sp(1)", "sp(" + m + ")"}, "sphere 3 mod 4"});
  }
  if (n == 15) out.push_back({'d', {"spin(9)"}, "sphere 15"});
  if (n == 7) out.push_back({'e', {"spin(7)"}, "sphere 7"});
  if (n == 6) out.push_back({'f', {"g2"}, "sphere 6"});
  return out;
}

}  // namespace detail

// All compact transitive effective actions admitted at signature (p,q),
// including swapped-orientation instances; duplicates (same id and same
// canonical compact) are emitted once.
inline std::vector<KamerichEntry> kamerich_entries(int p, int q) {
  if (p < 2 || q < 2)
    throw std::invalid_argument(
        "sphere-product catalog needs p, q >= 2 (lower signatures are "
        "handled by the cited Riemannian/Lorentzian classifications)");
  std::vector<KamerichEntry> out;
  auto add = [&](std::string id, const std::vector<std::string>& labels,
                 std::string cond) {
    KamerichEntry e{std::move(id), canonical_compact(labels),
                    std::move(cond)};
    if (std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(std::move(e));
  };
  const bool swapped_too = p != q;

  // ---- List I: sporadic actions on fixed sphere pairs. ----
  auto pair_is = [&](int a, int b) {
    return (p == a && q == b) || (p == b && q == a);
  };
  if (pair_is(5, 7)) add("I(a)", {"su(4)"}, "spheres {5,7}");
  if (pair_is(7, 7)) add("I(b)", {"spin(8)"}, "spheres {7,7}");
  if (pair_is(6, 7)) {
    add("I(c)", {"spin(7)"}, "spheres {6,7}");
    add("I(c)", {"u(1)", "spin(7)"}, "spheres {6,7}");
    add("I(d)", {"spin(8)"}, "spheres {6,7}");
    add("I(e)", {"so(8)"}, "spheres {6,7}");
    add("I(e)", {"u(1)", "so(8)"}, "spheres {6,7}");
  }

  // ---- List II: products of single-sphere transitive groups. ----
  // The id letters are sorted: the pair (K_1, K_2) is unordered, so e.g.
  // SU(2) x SO(3) and SO(3) x SU(2) both report as II(a,b).
  for (const auto& g1 : detail::sphere_transitive_groups(p))
    for (const auto& g2 : detail::sphere_transitive_groups(q)) {
      std::vector<std::string> labels = g1.labels;
      labels.insert(labels.end(), g2.labels.begin(), g2.labels.end());
      const char x = std::min(g1.letter, g2.letter);
      const char y = std::max(g1.letter, g2.letter);
      add(std::string("II(") + x + "," + y + ")", labels,
          "p: " + g1.constraint + "; q: " + g2.constraint);
    }

  // ---- List III: non-product actions, small sphere q' in {2, 5, 7}. ----
  auto list3 = [&](int big, int small) {
    if (big == 3 && small == 2) {
      add("III(a)", {"su(2)", "su(2)"}, "spheres (3,2)");
      add("III(a)", {"su(2)", "u(2)"}, "spheres (3,2)");
      add("III(a)", {"u(2)", "u(2)"}, "spheres (3,2)");
    }
    if (small == 2 && big % 2 == 1 && big >= 5) {
      const std::string k = std::to_string((big + 1) / 2);
      add("III(b)", {"su(" + k + ")", "su(2)"}, "p odd >= 5, q = 2");
      add("III(b)", {"su(" + k + ")", "u(2)"}, "p odd >= 5, q = 2");
      add("III(b)", {"u(" + k + ")", "u(2)"}, "p odd >= 5, q = 2");
    }
    if (small == 2 && big % 4 == 3 && big >= 7) {
      const std::string m = std::to_string((big + 1) / 4);
      add("III(c)", {"sp(" + m + ")", "su(2)"}, "p = 3 mod 4 >= 7, q = 2");
      add("III(c)", {"sp(" + m + ")", "u(2)"}, "p = 3 mod 4 >= 7, q = 2");
      add("III(c)", {"sp(1)", "sp(" + m + ")", "u(2)"},
          "p = 3 mod 4 >= 7, q = 2");
    }
    if (small == 5 && big % 4 == 3) {
      const std::string m = std::to_string((big + 1) / 4);
      add("III(d)", {"sp(" + m + ")", "su(3)"}, "p = 3 mod 4, q = 5");
      add("III(d)", {"sp(" + m + ")", "u(3)"}, "p = 3 mod 4, q = 5");
    }
    if (small == 7 && big % 4 == 3) {
      const std::string m = std::to_string((big + 1) / 4);
      add("III(e)", {"sp(" + m + ")", "sp(2)"}, "p = 3 mod 4, q = 7");
      add("III(e)", {"sp(1)", "sp(" + m + ")", "sp(2)"},
          "p = 3 mod 4, q = 7");
    }
  };
  list3(p, q);
  if (swapped_too) list3(q, p);

  return out;
}

}  // namespace mobius
