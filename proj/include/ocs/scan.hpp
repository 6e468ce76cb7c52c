#pragma once
// Census of the labeled cycle types sigma_f of Frobenius over all
// f in Poly_n(F_q^*).
//
// scan_reference enumerates PolyFq objects and factors by trial division --
// slow, allocation-heavy, obviously correct.  scan_census is the production
// kernel: dense byte-table arithmetic on stack buffers, unit-root stripping
// with double-root rejection, a gcd squarefree filter, distinct-degree
// splitting via repeated q-th powers, and sieve trial division only when
// several factors share a degree.  Work is split over contiguous candidate-
// index shards (the order documented in polyspace.hpp); shard partials are
// merged in shard order, so the result is independent of thread schedule.

#include <cstdint>
#include <map>

#include "ocs/cycle_types.hpp"
#include "ocs/field_table.hpp"

namespace ocs {

struct ScanResult {
  std::map<LabeledCycleType, uint64_t> counts;
  uint64_t poly_count = 0;   // |Poly_n(F_q^*)| = sum of counts
  uint64_t candidates = 0;   // (q-1) q^{n-1} monic candidates inspected
};

ScanResult scan_reference(const FieldTable& F, uint32_t d, uint32_t n);

// requires byte tables (q <= 256), d | q-1, 1 <= n <= 31, nshards >= 1
ScanResult scan_census(const FieldTable& F, uint32_t d, uint32_t n,
                       uint32_t nshards);

}  // namespace ocs
