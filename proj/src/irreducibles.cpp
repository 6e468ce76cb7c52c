#include "ocs/irreducibles.hpp"

#include <stdexcept>

namespace ocs {

IrreducibleTable IrreducibleTable::build(const FieldTable& F, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  IrreducibleTable tab;
  tab.field = &F;
  tab.max_degree = max_degree;
  tab.by_degree.resize(max_degree + 1);
  const uint32_t q = F.q();
  std::vector<uint32_t> coeffs;
  for (int deg = 1; deg <= max_degree; ++deg) {
    uint64_t count = 1;
    for (int k = 0; k < deg; ++k) count *= q;
    coeffs.assign(deg + 1, 0);
    coeffs[deg] = 1;
    for (uint64_t id = 0; id < count; ++id) {
      uint64_t rest = id;
      for (int k = deg - 1; k >= 0; --k) {
        uint64_t scale = 1;
        for (int j = 0; j < k; ++j) scale *= q;
        coeffs[k] = static_cast<uint32_t>((rest / scale) % q);
      }
      PolyFq cand(F, coeffs);
      bool irr = true;
      for (int dd = 1; dd <= deg / 2 && irr; ++dd)
        for (const PolyFq& p : tab.by_degree[dd]) {
          if (poly_mod(cand, p).is_zero()) { irr = false; break; }
        }
      if (irr) tab.by_degree[deg].push_back(cand);
    }
  }
  return tab;
}

}  // namespace ocs
