#pragma once
// Reflection arrangement of W_n = (Z/d)^n x| S_n acting on C^n:
//   Coord(i):      x_i = 0                  0 <= i < n
//   Diff(i,j,k):   x_i = zeta_d^k x_j       0 <= i < j < n, k in Z/d
// Its complement is the space of n-tuples of nonzero points with pairwise
// distinct (Z/d)-orbits.
//
// Hyperplanes carry a fixed linear order -- Coord(0..n-1) first, then Diff
// lexicographic by (i, j, k) -- which pins the no-broken-circuit basis and
// every sign downstream.
//
// With the point action (w.x)_{sigma(i)} = zeta^{g_i} x_i, hyperplanes map by
//   Coord(i)    -> Coord(sigma i)
//   Diff(i,j,k) -> x_{sigma i} = zeta^{k + g_i - g_j} x_{sigma j},
// renormalized to the i < j form by negating the twist when sigma reverses
// the pair.

#include <cstdint>
#include <vector>

#include "ocs/cyclotomic.hpp"
#include "ocs/wreath.hpp"

namespace ocs {

struct HPlane {
  enum class Kind : uint8_t { Coord, Diff };
  Kind kind;
  uint32_t i = 0;
  uint32_t j = 0;   // Diff only, i < j
  uint32_t k = 0;   // Diff only, twist in Z/d

  friend auto operator<=>(const HPlane&, const HPlane&) = default;
};

class Arrangement {
public:
  Arrangement(uint32_t d, uint32_t n);

  uint32_t d() const { return d_; }
  uint32_t n() const { return n_; }
  const std::vector<HPlane>& planes() const { return planes_; }
  size_t size() const { return planes_.size(); }

  size_t index_of(const HPlane& h) const;   // throws if absent
  HPlane act(const WreathElem& w, const HPlane& h) const;
  // the permutation of plane indices induced by w
  std::vector<uint32_t> act_indices(const WreathElem& w) const;

  // defining normal in C^n as a length-n cyclotomic vector
  std::vector<Cyc> normal(const HPlane& h) const;

private:
  uint32_t d_, n_;
  std::vector<HPlane> planes_;
};

}  // namespace ocs
