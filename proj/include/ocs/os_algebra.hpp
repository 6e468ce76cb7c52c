#pragma once
// Orlik-Solomon presentation of the cohomology of the arrangement complement,
// with its W_n-action.
//
// Basis: no-broken-circuit (NBC) subsets in the fixed hyperplane order of
// Arrangement.  S (independent, ascending) is NBC iff no index x outside S
// lies in the span of the planes of S above x; equivalently S contains no
// broken circuit C \ {min C}.
//
// Straightening: for a circuit C = {c_0 < c_1 < ... < c_p} the relation
//   e_{C \ c_0} = sum_{j>=1} (-1)^{j-1} e_{C \ c_j}
// rewrites any independent monomial into the NBC basis; products of wedge
// factors are kept ascending, with the sign of the sorting permutation.
// All expansion coefficients are integers, so every character value of the
// W_n-action on a graded piece is an integer.
//
// The degree budget is max_degree <= 8 monomial factors; subsets are memoised
// under a 64-bit key of (index+1) bytes, so the arrangement may have at most
// 254 hyperplanes.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ocs/arrangement.hpp"
#include "ocs/cycle_types.hpp"
#include "ocs/wreath.hpp"

namespace ocs {

class OSContext {
public:
  OSContext(uint32_t d, uint32_t n, uint32_t max_degree);

  const Arrangement& arrangement() const { return arr_; }
  uint32_t d() const { return arr_.d(); }
  uint32_t n() const { return arr_.n(); }
  uint32_t max_degree() const { return max_degree_; }

  // rank of the degree-p cohomology = number of NBC subsets of size p
  size_t rank(uint32_t p) const { return nbc_[p].size(); }
  const std::vector<std::vector<uint8_t>>& nbc_basis(uint32_t p) const {
    return nbc_[p];
  }

  // expansion of e_S in the NBC basis of degree |S|, sorted by basis index;
  // empty when S is dependent; S must be strictly ascending plane indices
  using Expansion = std::vector<std::pair<uint32_t, long long>>;
  const Expansion& straighten(const std::vector<uint8_t>& S) const;

  bool independent(const std::vector<uint8_t>& S) const;

  // trace of w on the degree-p piece
  long long character_value(uint32_t p, const WreathElem& w) const;
  // all degrees 0..max_degree at every class of the table (one representative
  // per class); classes processed in parallel, output order fixed
  std::vector<std::vector<long long>> graded_character(const TypeTable& table) const;

  // column-convention action matrix on degree p: w.e_{basis c} = sum_r M[r][c] e_{basis r}
  std::vector<std::vector<long long>> action_matrix(uint32_t p, const WreathElem& w) const;

  // dimension of the invariant subspace of degree p
  mpz_class invariant_dimension(uint32_t p, const TypeTable& table) const;

private:
  static uint64_t key_of(const std::vector<uint8_t>& S);
  bool spans(const std::vector<uint8_t>& T, uint32_t x) const;   // x in span(T)?
  const Expansion& straighten_uncached(const std::vector<uint8_t>& S,
                                       uint64_t key) const;

  Arrangement arr_;
  uint32_t max_degree_;
  std::vector<std::vector<Cyc>> normals_;                 // per plane
  std::vector<std::vector<std::vector<uint8_t>>> nbc_;    // [p] -> basis subsets, lex
  std::vector<std::unordered_map<uint64_t, uint32_t>> nbc_index_;
  mutable std::unordered_map<uint64_t, Expansion> memo_;  // prefilled, then read-only
};

}  // namespace ocs
