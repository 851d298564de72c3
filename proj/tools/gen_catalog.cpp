// Emits the real-form catalog data file. The committed data file must be
// byte-identical to this tool's output (enforced by a test), so the file
// stays reviewable while the generation rules remain the single source of
// truth.
//
// Family coverage: every real form, within the rank horizon, whose maximal
// compact subalgebra can arise from the transitive-on-spheres compact
// groups: so(a,b); su(a,b); sp(a,b); sl(n,R); su*(2n); the realified
// complex algebras sl(n,C), so(n,C), sp(n,C), g2(C); the split g2(2); and
// all compact forms as allowed direct summands. Low-rank coincidences are
// emitted under one canonical name only:
//   so(1,2), sl(2,R), sp(1,R)      -> su(1,1)
//   so(1,3)                        -> sl(2,C)
//   so(1,4)                        -> sp(1,1)
//   so(2,4)                        -> su(2,2)
//   so(1,5)  (= su*(4), dropped)   -> so(1,5)
//   so(3,3)  (= sl(4,R), dropped)  -> so(3,3)
//   so(2,3)  (= sp(2,R))           -> so(2,3)
//   so(3,C), sp(1,C)               -> sl(2,C)
//   so(5,C)                        -> sp(2,C)
//   so(6,C)                        -> sl(4,C)

#include "mobius/catalog.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace mobius;

namespace {

void emit(std::ostream& out) {
  out << "# Real forms of semisimple Lie algebras keyed by maximal compact "
         "subalgebra.\n";
  out << "# Generated file - regenerate with the gen_catalog tool; do not "
         "edit by hand.\n";
  out << "# Schema: entry name=<label> family=<rule-family> "
         "params=<ints|-> complex=<factor types> compact=<canonical "
         "compact> symdim=<dim form - dim compact> conj=<conjugation tag> "
         "index=<index-rule tag> cite=<source>\n";
  out << "version 1\n";
  auto row = [&](FormFamily f, std::vector<int> params) {
    out << format_entry(make_entry(f, params)) << "\n";
  };

  // Non-compact forms.
  for (int s = 5; s <= 2 * kMaxRank + 1; ++s)
    for (int a = 1; 2 * a <= s; ++a) {
      int b = s - a;
      if ((a == 1 && b == 4) || (a == 2 && b == 4)) continue;  // aliases
      row(FormFamily::so, {a, b});
    }
  for (int s = 2; s <= kMaxRank + 1; ++s)
    for (int a = 1; 2 * a <= s; ++a) row(FormFamily::su, {a, s - a});
  for (int s = 2; s <= kMaxRank; ++s)
    for (int a = 1; 2 * a <= s; ++a) row(FormFamily::sp, {a, s - a});
  for (int n = 3; n <= kMaxRank + 1; ++n) {
    if (n == 4) continue;  // sl(4,R) = so(3,3)
    row(FormFamily::sl_r, {n});
  }
  for (int n = 3; 2 * n - 1 <= kMaxRank; ++n) row(FormFamily::su_star, {n});
  for (int n = 2; n <= kMaxRank + 1; ++n) row(FormFamily::sl_c, {n});
  for (int n = 7; n <= 2 * kMaxRank + 1; ++n) row(FormFamily::so_c, {n});
  for (int n = 2; n <= kMaxRank; ++n) row(FormFamily::sp_c, {n});
  row(FormFamily::g2_split, {});
  row(FormFamily::g2_c, {});

  // Compact forms (allowed as direct summands only).
  for (int n = 2; n <= kMaxRank + 1; ++n) row(FormFamily::c_su, {n});
  for (int n = 7; n <= 2 * kMaxRank + 1; ++n) row(FormFamily::c_so, {n});
  for (int n = 2; n <= kMaxRank; ++n) row(FormFamily::c_sp, {n});
  row(FormFamily::c_g2, {});
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--out") {
    std::ofstream f(argv[2], std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 1;
    }
    emit(f);
    return 0;
  }
  if (argc != 1) {
    std::cerr << "usage: gen_catalog [--out FILE]\n";
    return 1;
  }
  emit(std::cout);
  return 0;
}
