#include "ocs/field_table.hpp"

#include <cassert>
#include <stdexcept>

namespace ocs {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// polynomial representatives over F_p encoded as digit vectors, low first
using Digits = std::vector<uint32_t>;

Digits decode(uint32_t id, uint32_t p, uint32_t f) {
  Digits d(f, 0);
  for (uint32_t k = 0; k < f; ++k) {
    d[k] = id % p;
    id /= p;
  }
  return d;
}

uint32_t encode(const Digits& d, uint32_t p) {
  uint32_t id = 0;
  for (size_t k = d.size(); k-- > 0;) id = id * p + d[k];
  return id;
}

// multiply two representatives mod the field modulus (slow path used only
// while building tables)
uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t p, uint32_t f,
                  const Digits& modulus) {
  Digits da = decode(a, p, f), db = decode(b, p, f);
  std::vector<uint32_t> prod(2 * f - 1, 0);
  for (uint32_t i = 0; i < f; ++i)
    for (uint32_t j = 0; j < f; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce mod modulus (monic)
  for (size_t k = prod.size(); k-- > f;) {
    uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (uint32_t j = 0; j < f; ++j) {
      uint32_t sub = (c * modulus[j]) % p;
      prod[k - f + j] = (prod[k - f + j] + p - sub) % p;
    }
  }
  prod.resize(f);
  return encode(prod, p);
}

// monic polys over F_p as digit vectors of length deg+1 (top digit == 1);
// true iff monic d divides monic n
bool divides(const Digits& d, const Digits& n, uint32_t p) {
  if (n.size() < d.size()) return false;
  Digits r = n;
  const size_t dd = d.size() - 1;
  for (size_t k = r.size(); k-- > dd;) {
    uint32_t c = r[k];
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) {
      uint32_t sub = (c * d[j]) % p;
      r[k - dd + j] = (r[k - dd + j] + p - sub) % p;
    }
  }
  for (size_t j = 0; j < dd; ++j)
    if (r[j] != 0) return false;
  return true;
}

}  // namespace

FieldTable FieldTable::build(uint32_t p, uint32_t f) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("field degree must be at least 1");
  uint64_t q64 = 1;
  for (uint32_t k = 0; k < f; ++k) {
    q64 *= p;
    if (q64 > (1u << 20)) throw std::invalid_argument("field size exceeds 2^20");
  }
  FieldTable F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = static_cast<uint32_t>(q64);

  // lexicographically smallest monic irreducible of degree f over F_p,
  // ordered by the id of the non-leading digits
  if (f == 1) {
    F.modulus_ = {0, 1};  // x
  } else {
    // collect monic irreducibles of degree <= f/2 for trial division
    std::vector<Digits> small;
    for (uint32_t deg = 1; deg <= f / 2; ++deg) {
      uint64_t count = 1;
      for (uint32_t k = 0; k < deg; ++k) count *= p;
      for (uint32_t id = 0; id < count; ++id) {
        Digits cand = decode(id, p, deg);
        cand.push_back(1);
        bool irr = true;
        for (const auto& s : small)
          if (s.size() <= (deg / 2) + 1 && divides(s, cand, p)) { irr = false; break; }
        if (irr) small.push_back(cand);
      }
    }
    uint64_t count = 1;
    for (uint32_t k = 0; k < f; ++k) count *= p;
    for (uint32_t id = 0; id < count; ++id) {
      Digits cand = decode(id, p, f);
      cand.push_back(1);
      bool irr = true;
      for (const auto& s : small)
        if (divides(s, cand, p)) { irr = false; break; }
      if (irr) { F.modulus_.assign(cand.begin(), cand.end()); break; }
    }
    if (F.modulus_.empty()) throw std::logic_error("no irreducible modulus found");
  }

  // find the smallest generator of the cyclic group of order q-1
  const uint32_t q = F.q_;
  std::vector<uint32_t> prime_factors;
  {
    uint32_t m = q - 1;
    for (uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  Digits mod_digits(F.modulus_.begin(), F.modulus_.end());
  auto field_mul = [&](uint32_t a, uint32_t b) {
    if (f == 1) return a * b % p;
    return slow_mul(a, b, p, f, mod_digits);
  };
  auto field_pow = [&](uint32_t a, uint32_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = field_mul(r, a);
      a = field_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  F.gen_ = 0;
  for (uint32_t cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (uint32_t ell : prime_factors)
      if (field_pow(cand, (q - 1) / ell) == 1) { primitive = false; break; }
    if (q == 2) primitive = (cand == 1);
    if (primitive) { F.gen_ = cand; break; }
  }
  if (F.gen_ == 0) throw std::logic_error("no generator found");

  F.exp_.resize(q - 1);
  F.log_.assign(q, -1);
  uint32_t x = 1;
  for (uint32_t k = 0; k < q - 1; ++k) {
    F.exp_[k] = x;
    F.log_[x] = static_cast<int32_t>(k);
    x = field_mul(x, F.gen_);
  }
  if (x != 1) throw std::logic_error("generator order mismatch");

  if (q <= 256) {
    F.add8_.resize(q * q);
    F.mul8_.resize(q * q);
    F.neg8_.resize(q);
    F.log8_.resize(q);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        F.add8_[a * q + b] = static_cast<uint8_t>(F.add(a, b));
        F.mul8_[a * q + b] = static_cast<uint8_t>(F.mul(a, b));
      }
      F.neg8_[a] = static_cast<uint8_t>(F.neg(a));
      F.log8_[a] = a ? static_cast<uint8_t>(F.log_[a] % (q - 1)) : 0;
    }
  }
  return F;
}

uint32_t FieldTable::add(uint32_t a, uint32_t b) const {
  if (f_ == 1) return (a + b) % p_;
  uint32_t r = 0, base = 1;
  for (uint32_t k = 0; k < f_; ++k) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * base;
    base *= p_;
  }
  return r;
}

uint32_t FieldTable::neg(uint32_t a) const {
  if (f_ == 1) return (p_ - a) % p_;
  uint32_t r = 0, base = 1;
  for (uint32_t k = 0; k < f_; ++k) {
    uint32_t da = a % p_;
    a /= p_;
    r += ((p_ - da) % p_) * base;
    base *= p_;
  }
  return r;
}

uint32_t FieldTable::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldTable::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldTable::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t k = (static_cast<uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

uint32_t FieldTable::dlog(uint32_t a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  return static_cast<uint32_t>(log_[a]);
}

}  // namespace ocs
