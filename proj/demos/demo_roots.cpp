// Tour of the root-system layer: positive roots, the Weyl vector, and the
// dimension formula, for one algebra of each series.

#include "mobius/irreps.hpp"
#include "mobius/rootsystem.hpp"

#include <iostream>

using namespace mobius;

int main() {
  for (const char* name : {"A2", "B2", "C3", "D4", "G2"}) {
    const RootSystem rs{parse_type(name)};
    std::cout << name << ": rank " << rs.rank() << ", "
              << rs.positive_roots().size() << " positive roots, Weyl vector "
              << rs.weyl_vector().str() << "\n";
    std::cout << "  fundamental representation dimensions:";
    for (int i = 0; i < rs.rank(); ++i)
      std::cout << " " << rs.weyl_dim(fundamental_weight(rs.rank(), i)).str();
    std::cout << "\n";
  }

  // Candidate search: which faithful irreducible representations of
  // so(8,C) = D4 have complex dimension 8? Triality shows up as three
  // distinct highest weights with identical invariants.
  std::cout << "\nfaithful 8-dimensional representations of D4:\n";
  const SemisimpleComplex d4 = parse_semisimple("D4");
  for (const auto& ir : candidate_sets(d4, 8).c_d)
    std::cout << "  " << ir.weight.str() << "  self-dual "
              << (ir.self_dual ? "yes" : "no") << "  form "
              << form_type_str(ir.form_type) << "\n";
  return 0;
}
