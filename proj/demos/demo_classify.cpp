// Full classification run at the smallest signature with an exceptional
// survivor: (p,q) = (3,2), where the only transitive conformal groups are
// SO_0(4,3) itself and split G2(2).

#include "mobius/catalog_data.hpp"
#include "mobius/classify.hpp"
#include "mobius/report.hpp"

#include <iostream>

using namespace mobius;

int main() {
  const Catalog cat = Catalog::load(kCatalogText);
  const Report rep = run_pipeline(cat, 3, 2, 0);
  std::cout << render_report_text(rep);
  return 0;
}
