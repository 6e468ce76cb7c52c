#pragma once
// Dense univariate polynomials over a FieldTable field, low degree first,
// always trimmed (no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ocs/field_table.hpp"

namespace ocs {

class PolyFq {
public:
  PolyFq() : F_(nullptr) {}
  PolyFq(const FieldTable& F, std::vector<uint32_t> coeffs);
  static PolyFq zero(const FieldTable& F) { return PolyFq(F, {}); }
  static PolyFq constant(const FieldTable& F, uint32_t c) { return PolyFq(F, {c}); }
  static PolyFq t(const FieldTable& F) { return PolyFq(F, {0, 1}); }

  const FieldTable& field() const { return *F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint32_t coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  uint32_t eval(uint32_t x) const;
  PolyFq derivative() const;
  PolyFq monic() const;   // unit-normalized; zero stays zero

  friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator*(const PolyFq& a, const PolyFq& b);
  friend bool operator==(const PolyFq& a, const PolyFq& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyFq& a, const PolyFq& b) { return a.c_ != b.c_; }
  friend bool operator<(const PolyFq& a, const PolyFq& b);   // (deg, lex) order

  std::string to_string() const;   // e.g. "t^2 + 2*t + 1"

private:
  const FieldTable* F_;
  std::vector<uint32_t> c_;
  void trim();
};

// quotient and remainder; divisor must be nonzero
std::pair<PolyFq, PolyFq> poly_divrem(const PolyFq& a, const PolyFq& b);
PolyFq poly_mod(const PolyFq& a, const PolyFq& m);
PolyFq poly_gcd(const PolyFq& a, const PolyFq& b);   // monic gcd
PolyFq poly_mulmod(const PolyFq& a, const PolyFq& b, const PolyFq& m);
PolyFq poly_powmod(const PolyFq& base, const mpz_class& e, const PolyFq& m);

// Label of a monic irreducible p (p != t) at level d | q-1: the constant
// c = t^{(q^i - 1)/d} mod p, i = deg p, is a d-th root of unity gamma^{k(q-1)/d};
// returns k in Z/d.  Throws std::domain_error if p has constant term zero or
// the power is not constant (p not irreducible).
uint32_t root_label(const PolyFq& p_irr, uint32_t d);

}  // namespace ocs
