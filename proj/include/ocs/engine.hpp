#pragma once
// The four operations behind the CLI.
//
//   pointcount   scan Poly_n(F_q^*) and average a statistic of sigma_f
//   cohomology   stabilized <P, H^i> values and the truncated series in 1/q
//   verify-glt   exact equality of the scan side and the alternating
//                q-weighted cohomology side at one fixed n
//   normform     three-way census of the all-zero-labels locus: direct
//                delta count, two-term witness search, cohomological value
//
// Every operation returns a Report whose payload bytes depend only on the
// configuration, never on shard count or thread schedule.

#include "ocs/report.hpp"

namespace ocs {

Report run_pointcount(const RunConfig& cfg);
Report run_cohomology(const RunConfig& cfg);
Report run_verify_glt(const RunConfig& cfg);
Report run_normform(const RunConfig& cfg);

Report run(const RunConfig& cfg);   // dispatch on cfg.mode

// q = p^f with p prime; throws std::invalid_argument otherwise
std::pair<uint32_t, uint32_t> split_prime_power(uint32_t q);

}  // namespace ocs
