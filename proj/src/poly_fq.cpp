#include "ocs/poly_fq.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ocs {

PolyFq::PolyFq(const FieldTable& F, std::vector<uint32_t> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
  for (uint32_t x : c_)
    if (x >= F.q()) throw std::invalid_argument("coefficient out of field range");
  trim();
}

void PolyFq::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint32_t PolyFq::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = F_->add(F_->mul(acc, x), c_[k]);
  return acc;
}

PolyFq PolyFq::derivative() const {
  if (c_.size() <= 1) return zero(*F_);
  std::vector<uint32_t> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) {
    uint32_t scalar = static_cast<uint32_t>(k % F_->p());
    d[k - 1] = F_->mul(c_[k], scalar % F_->p());
  }
  return PolyFq(*F_, std::move(d));
}

PolyFq PolyFq::monic() const {
  if (is_zero() || c_.back() == 1) return *this;
  uint32_t s = F_->inv(c_.back());
  std::vector<uint32_t> d(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) d[k] = F_->mul(c_[k], s);
  return PolyFq(*F_, std::move(d));
}

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
  const FieldTable& F = a.field();
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t k = 0; k < c.size(); ++k) c[k] = F.add(a.coeff(k), b.coeff(k));
  return PolyFq(F, std::move(c));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
  const FieldTable& F = a.field();
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t k = 0; k < c.size(); ++k) c[k] = F.sub(a.coeff(k), b.coeff(k));
  return PolyFq(F, std::move(c));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
  const FieldTable& F = a.field();
  if (a.is_zero() || b.is_zero()) return PolyFq::zero(F);
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return PolyFq(F, std::move(c));
}

bool operator<(const PolyFq& a, const PolyFq& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (size_t k = a.c_.size(); k-- > 0;)
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  return false;
}

std::pair<PolyFq, PolyFq> poly_divrem(const PolyFq& a, const PolyFq& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldTable& F = a.field();
  if (a.deg() < b.deg()) return {PolyFq::zero(F), a};
  std::vector<uint32_t> rem(a.coeffs());
  std::vector<uint32_t> quo(a.deg() - b.deg() + 1, 0);
  const uint32_t lead_inv = F.inv(b.coeff(b.deg()));
  for (size_t k = rem.size(); k-- > 0;) {
    if (k < static_cast<size_t>(b.deg())) break;
    uint32_t c = F.mul(rem[k], lead_inv);
    if (c == 0) continue;
    quo[k - b.deg()] = c;
    for (int j = 0; j <= b.deg(); ++j)
      rem[k - b.deg() + j] = F.sub(rem[k - b.deg() + j], F.mul(c, b.coeff(j)));
  }
  return {PolyFq(F, std::move(quo)), PolyFq(F, std::move(rem))};
}

PolyFq poly_mod(const PolyFq& a, const PolyFq& m) { return poly_divrem(a, m).second; }

PolyFq poly_gcd(const PolyFq& a, const PolyFq& b) {
  PolyFq x = a, y = b;
  while (!y.is_zero()) {
    PolyFq r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

PolyFq poly_mulmod(const PolyFq& a, const PolyFq& b, const PolyFq& m) {
  return poly_mod(a * b, m);
}

PolyFq poly_powmod(const PolyFq& base, const mpz_class& e, const PolyFq& m) {
  if (e < 0) throw std::domain_error("negative exponent");
  PolyFq r = PolyFq::constant(base.field(), 1);
  PolyFq b = poly_mod(base, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return poly_mod(r, m);
  for (size_t k = bits; k-- > 0;) {
    r = poly_mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), k)) r = poly_mulmod(r, b, m);
  }
  return r;
}

uint32_t root_label(const PolyFq& p_irr, uint32_t d) {
  const FieldTable& F = p_irr.field();
  const uint32_t q = F.q();
  if (d == 0 || (q - 1) % d != 0)
    throw std::invalid_argument("label level must divide q-1");
  if (p_irr.deg() < 1 || !p_irr.is_monic())
    throw std::domain_error("label is defined for monic irreducibles");
  if (p_irr.coeff(0) == 0)
    throw std::domain_error("label undefined: polynomial has root zero");
  const uint32_t i = static_cast<uint32_t>(p_irr.deg());
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), q, i);
  e = (e - 1) / d;
  PolyFq c = poly_powmod(PolyFq::t(F), e, p_irr);
  if (c.deg() > 0)
    throw std::domain_error("label undefined: input is not irreducible");
  const uint32_t c0 = c.coeff(0);
  if (c0 == 0) throw std::domain_error("label undefined: zero power");
  const uint32_t k0 = F.dlog(c0);
  const uint32_t step = (q - 1) / d;
  if (k0 % step != 0)
    throw std::domain_error("label undefined: power is not a d-th root of unity");
  return (k0 / step) % d;
}

std::string PolyFq::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    if (k == 0) {
      os << c_[k];
    } else {
      if (c_[k] != 1) os << c_[k] << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ocs
