#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element is stored as a length-m vector of rationals (a_0, ..., a_{m-1})
// representing sum a_k zeta_m^k, kept in the canonical form obtained by
// reducing modulo the m-th cyclotomic polynomial Phi_m.  After reduction the
// coefficients a_k with k >= deg Phi_m = phi(m) vanish, so equality of
// elements is equality of coefficient vectors at a common order.
//
// Binary operations on elements of different orders first lift both to the
// lcm of the orders (zeta_m = zeta_M^{M/m} for m | M).

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ocs {

using Rat = mpq_class;

class Cyc {
public:
  Cyc() : order_(1), c_(1, 0) {}                   // zero of order 1
  explicit Cyc(const Rat& r) : order_(1), c_(1, canonical(r)) {}
  explicit Cyc(long v) : order_(1), c_(1, Rat(v)) {}

  // mpq_class built from a num/den pair is not reduced automatically
  static Rat canonical(Rat r) { r.canonicalize(); return r; }

  // zeta_m^k
  static Cyc zeta(int m, long k);
  static Cyc rational(const Rat& r, int order);

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // same element viewed in Q(zeta_M), requires order() | M
  Cyc lifted(int M) const;

  Cyc operator-() const;
  Cyc inv() const;       // throws std::domain_error on zero
  Cyc conj() const;      // zeta^k -> zeta^{m-k}

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rational() const;   // throws std::domain_error if not rational

  std::complex<double> approx() const;
  std::string to_string() const;   // canonical text, e.g. "1/2*z6^1 - 1"

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc& operator+=(const Cyc& b) { *this = *this + b; return *this; }
  Cyc& operator-=(const Cyc& b) { *this = *this - b; return *this; }
  Cyc& operator*=(const Cyc& b) { *this = *this * b; return *this; }

  // coefficients of Phi_m, low degree first, monic integral
  static const std::vector<mpz_class>& cyclotomic_poly(int m);
  static int phi(int m);

private:
  Cyc(int order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
  void reduce();   // bring coefficient vector to canonical form mod Phi_m

  int order_;
  std::vector<Rat> c_;   // size == order_, canonical
};

}  // namespace ocs
