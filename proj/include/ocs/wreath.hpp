#pragma once
// Concrete wreath product elements w = (g, sigma) in (Z/d)^n x| S_n.
//
// Convention: w acts on points by (w.x)_{sigma(i)} = zeta^{g_i} x_i, so the
// composition rule is (g, sigma)(h, tau) = (g o tau + h, sigma tau), where
// (g o tau)_i = g_{tau(i)}.  The label of a cycle of sigma is the sum of the
// g-entries along the cycle (conjugation-invariant since Z/d is abelian).

#include <cstdint>
#include <vector>

#include "ocs/cycle_types.hpp"

namespace ocs {

struct WreathElem {
  uint32_t d = 1;
  std::vector<uint32_t> labels;   // g_i in Z/d, size n
  std::vector<uint32_t> perm;     // sigma as images, 0-based, size n

  uint32_t n() const { return static_cast<uint32_t>(perm.size()); }
  static WreathElem identity(uint32_t d, uint32_t n);

  friend bool operator==(const WreathElem&, const WreathElem&) = default;
};

WreathElem wreath_mul(const WreathElem& a, const WreathElem& b);   // a then b: a∘b
WreathElem wreath_inv(const WreathElem& a);
LabeledCycleType wreath_type(const WreathElem& a);

// canonical representative of a class: cycles laid out consecutively in
// canonical part order, with the full cycle label on the first index
WreathElem wreath_representative(const LabeledCycleType& t, uint32_t d);

// all d^n n! elements (test/oracle scale only)
std::vector<WreathElem> wreath_all_elements(uint32_t d, uint32_t n);

}  // namespace ocs
