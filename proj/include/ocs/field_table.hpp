#pragma once
// Table-driven arithmetic for F_q, q = p^f <= 2^20.
//
// Elements are integers 0..q-1.  The integer id encodes the coefficient
// vector of the representative polynomial over F_p in base p: the element
// c_0 + c_1 x + ... + c_{f-1} x^{f-1} of F_p[x]/(modulus) has id
// sum c_k p^k.  For f = 1 this is the usual Z/p representation.
//
// The modulus is the lexicographically smallest monic irreducible of degree
// f over F_p, and the generator is the smallest element id of multiplicative
// order q-1, so tables are deterministic for a given (p, f).

#include <cstdint>
#include <vector>

namespace ocs {

class FieldTable {
public:
  // build_field: validates p prime, f >= 1, p^f <= 2^20
  static FieldTable build(uint32_t p, uint32_t f);

  uint32_t p() const { return p_; }
  uint32_t f() const { return f_; }
  uint32_t q() const { return q_; }
  uint32_t generator() const { return gen_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  uint32_t inv(uint32_t a) const;   // throws std::domain_error on 0
  uint32_t pow(uint32_t a, uint64_t e) const;
  // discrete log base generator(); throws std::domain_error on 0
  uint32_t dlog(uint32_t a) const;
  uint32_t exp(uint32_t k) const { return exp_[k % (q_ - 1)]; }

  // dense byte tables for the scan kernel, present when q <= 256
  bool has_byte_tables() const { return !add8_.empty(); }
  const uint8_t* add_table() const { return add8_.data(); }
  const uint8_t* mul_table() const { return mul8_.data(); }
  const uint8_t* neg_table() const { return neg8_.data(); }
  const uint8_t* dlog_table() const { return log8_.data(); }   // dlog mod q-1

private:
  FieldTable() = default;

  uint32_t p_ = 0, f_ = 0, q_ = 0, gen_ = 0;
  std::vector<uint32_t> modulus_;       // monic, length f+1, coeffs in F_p
  std::vector<int32_t> log_;            // log_[0] = -1
  std::vector<uint32_t> exp_;           // exp_[k] = generator^k, k < q-1
  std::vector<uint8_t> add8_, mul8_, neg8_, log8_;
};

}  // namespace ocs
