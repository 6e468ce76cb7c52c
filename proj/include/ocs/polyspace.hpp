#pragma once
// Poly_n(F_q^*): monic squarefree degree-n polynomials over F_q with nonzero
// constant term, i.e. configurations of n points of the punctured affine
// line over F_q.
//
// Candidate enumeration order: all monic degree-n polynomials with nonzero
// constant term, indexed by
//   I = (c_0 - 1) * q^{n-1} + sum_{k=1}^{n-1} c_k * q^{n-1-k},
// so c_0 in 1..q-1 is the most significant digit.  Shards are contiguous
// index ranges of this order.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ocs/cycle_types.hpp"
#include "ocs/irreducibles.hpp"
#include "ocs/poly_fq.hpp"

namespace ocs {

// number of candidates (q-1) q^{n-1}; throws if it would overflow 2^62
uint64_t polyspace_candidates(uint32_t q, uint32_t n);

// inverse of the index map above
PolyFq poly_from_index(const FieldTable& F, uint32_t n, uint64_t index);

bool in_polyspace(const PolyFq& f);   // monic, squarefree, f(0) != 0

// stream the members of Poly_n(F_q^*) within one shard (contiguous index
// subrange shard of nshards); visit returns false to stop early
void enumerate_polyspace(const FieldTable& F, uint32_t n, uint32_t shard,
                         uint32_t nshards,
                         const std::function<bool(const PolyFq&)>& visit);
// convenience: collect a whole (small) polyspace
std::vector<PolyFq> collect_polyspace(const FieldTable& F, uint32_t n);

// monic irreducible factors with multiplicity, by trial division against the
// sieved table (which must reach degree >= deg(f)/2); (deg,lex)-sorted
std::vector<PolyFq> factorize(const PolyFq& f, const IrreducibleTable& table);

// labeled cycle type of Frobenius on the d-th roots of the roots of f:
// one part (deg p, root_label(p, d)) per irreducible factor p
LabeledCycleType frobenius_type(const PolyFq& f, uint32_t d,
                                const IrreducibleTable& table);

int delta_indicator(const LabeledCycleType& t);

struct NormFormWitness {
  PolyFq g, h;
  int sign;   // +1: f = g^d + t h^d, -1: f = g^d - t h^d
};

// exhaustive search over deg g <= n/d and deg h <= (n-1)/d (complete for the
// two-term shape: the leading terms of g^d and t h^d live in degrees that
// differ mod d, so they can never cancel); minus sign preferred, then plus;
// nullopt when no witness exists
std::optional<NormFormWitness> norm_form_witness(const PolyFq& f, uint32_t d);
// restricted to one sign: +1 searches f = g^d + t h^d, -1 the minus shape
std::optional<NormFormWitness> norm_form_witness(const PolyFq& f, uint32_t d,
                                                 int sign);

// diagnostic census: the set of f in Poly_n(F_q^*) that agree up to a unit
// with a norm prod_{j<d} u(zeta^j s) of some monic u in F_q[s], s^d = t.
// Class field theory for the Kummer cover says this set is exactly the
// delta-locus, unlike the two-term witness shape above which is complete
// only for d <= 2.
std::vector<PolyFq> norm_closure_census(const FieldTable& F, uint32_t d, uint32_t n);

}  // namespace ocs
