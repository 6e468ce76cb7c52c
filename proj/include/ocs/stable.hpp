#pragma once
// Stabilized inner products <P, H^i>: for a character polynomial P the value
// <P_n, H^i_n>_{W_n} is eventually constant in n (representation stability);
// this module computes the window n = max(i,1) .. i + deg(P) + 3, locates the
// trailing plateau, and returns its value with the observed onset.

#include <cstdint>
#include <vector>

#include "ocs/cyclotomic.hpp"
#include "ocs/statistic.hpp"

namespace ocs {

struct StableValue {
  Cyc value;        // plateau value of <P_n, H^i_n>
  uint32_t onset;   // first n of the trailing constant run
  uint32_t run;     // length of that run (>= 2 or an error was thrown)
  uint32_t n_min, n_max;
  std::vector<Cyc> history;   // <P_n, H^i_n> for n = n_min..n_max
};

// throws std::runtime_error("no plateau ...") when the last two window values
// still differ
StableValue stable_inner_product(const Statistic& P, uint32_t i);

}  // namespace ocs
