#pragma once
// Sieve of monic irreducibles over F_q up to a degree bound, built once per
// (q, n) run and shared read-only by factorization and the scan kernels.

#include <vector>

#include "ocs/poly_fq.hpp"

namespace ocs {

struct IrreducibleTable {
  const FieldTable* field = nullptr;
  int max_degree = 0;
  // by_degree[i] = all monic irreducibles of degree i, in (deg, lex) order;
  // index 0 is unused
  std::vector<std::vector<PolyFq>> by_degree;

  static IrreducibleTable build(const FieldTable& F, int max_degree);
};

}  // namespace ocs
