#include "ocs/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ocs {

namespace {

// exact division of integral polynomials, low degree first; remainder must
// vanish (used only for x^m - 1 divided by products of cyclotomics)
std::vector<mpz_class> exact_div(std::vector<mpz_class> num,
                                 const std::vector<mpz_class>& den) {
  assert(!den.empty() && den.back() == 1);  // monic
  const size_t dd = den.size() - 1;
  assert(num.size() >= den.size());
  std::vector<mpz_class> quo(num.size() - dd, 0);
  for (size_t qi = quo.size(); qi-- > 0;) {
    mpz_class c = num[qi + dd];
    quo[qi] = c;
    if (c != 0)
      for (size_t j = 0; j <= dd; ++j) num[qi + j] -= c * den[j];
  }
  for (const auto& r : num) assert(r == 0);
  return quo;
}

std::map<int, std::vector<mpz_class>>& phi_cache() {
  static std::map<int, std::vector<mpz_class>> cache;
  return cache;
}
std::mutex phi_mutex;

const std::vector<mpz_class>& phi_poly_locked(int m) {
  auto& cache = phi_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<mpz_class> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = exact_div(std::move(num), phi_poly_locked(d));
  return cache.emplace(m, std::move(num)).first->second;
}

}  // namespace

const std::vector<mpz_class>& Cyc::cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_poly_locked(m);
}

int Cyc::phi(int m) {
  return static_cast<int>(cyclotomic_poly(m).size()) - 1;
}

void Cyc::reduce() {
  const auto& mod = cyclotomic_poly(order_);
  const size_t deg = mod.size() - 1;
  for (size_t k = c_.size(); k-- > deg;) {
    if (c_[k] == 0) continue;
    Rat lead = c_[k];
    c_[k] = 0;
    for (size_t j = 0; j < deg; ++j) c_[k - deg + j] -= lead * mod[j];
  }
  c_.resize(order_, Rat(0));
}

Cyc Cyc::zeta(int m, long k) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long r = k % m;
  if (r < 0) r += m;
  std::vector<Rat> c(std::max<size_t>(m, r + 1), Rat(0));
  c[r] = 1;
  Cyc z(m, std::move(c));
  z.reduce();
  return z;
}

Cyc Cyc::rational(const Rat& r, int order) {
  return Cyc(r).lifted(order);
}

Cyc Cyc::lifted(int M) const {
  if (M == order_) return *this;
  if (M % order_ != 0)
    throw std::invalid_argument("lift target must be a multiple of the order");
  const int s = M / order_;
  std::vector<Rat> c(M, Rat(0));
  for (int k = 0; k < order_; ++k) c[k * s] = c_[k];
  Cyc z(M, std::move(c));
  z.reduce();
  return z;
}

Cyc Cyc::operator-() const {
  Cyc z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rat Cyc::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

Cyc Cyc::conj() const {
  std::vector<Rat> c(order_, Rat(0));
  for (int k = 0; k < order_; ++k) {
    if (c_[k] == 0) continue;
    c[(order_ - k) % order_] += c_[k];
  }
  Cyc z(order_, std::move(c));
  z.reduce();
  return z;
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
  const int m = lcm_int(a.order_, b.order_);
  Cyc x = a.lifted(m), y = b.lifted(m);
  for (int k = 0; k < m; ++k) x.c_[k] += y.c_[k];
  return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  const int m = lcm_int(a.order_, b.order_);
  Cyc x = a.lifted(m), y = b.lifted(m);
  for (int k = 0; k < m; ++k) x.c_[k] -= y.c_[k];
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  const int m = lcm_int(a.order_, b.order_);
  Cyc x = a.lifted(m), y = b.lifted(m);
  std::vector<Rat> conv(2 * m, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (x.c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (y.c_[j] == 0) continue;
      conv[i + j] += x.c_[i] * y.c_[j];
    }
  }
  Cyc z(m, std::move(conv));
  z.reduce();
  return z;
}

bool operator==(const Cyc& a, const Cyc& b) {
  const int m = lcm_int(a.order_, b.order_);
  Cyc x = a.lifted(m), y = b.lifted(m);
  return x.c_ == y.c_;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  // extended Euclid in Q[x]: u * this + v * Phi_m = 1, so inverse = u.
  using Poly = std::vector<Rat>;
  auto deg = [](const Poly& p) {
    for (size_t k = p.size(); k-- > 0;)
      if (p[k] != 0) return static_cast<long>(k);
    return -1L;
  };
  const auto& modz = cyclotomic_poly(order_);
  Poly r0(modz.size());
  for (size_t k = 0; k < modz.size(); ++k) r0[k] = Rat(modz[k]);
  Poly r1(c_.begin(), c_.end());
  Poly s0{Rat(0)}, s1{Rat(1)};   // Bezout coefficients for the element slot
  while (true) {
    long d1 = deg(r1);
    if (d1 < 0) throw std::domain_error("element not invertible (unexpected)");
    if (d1 == 0) break;
    long d0 = deg(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    Rat f = r0[d0] / r1[d1];
    long shift = d0 - d1;
    for (long k = 0; k <= d1; ++k) r0[k + shift] -= f * r1[k];
    if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
    for (size_t k = 0; k < s1.size(); ++k) s0[k + shift] -= f * s1[k];
  }
  Rat unit = r1[deg(r1)];
  std::vector<Rat> u(std::max<size_t>(s1.size(), order_), Rat(0));
  for (size_t k = 0; k < s1.size(); ++k) u[k] = s1[k] / unit;
  Cyc z(order_, std::move(u));
  z.reduce();
  return z;
}

Cyc operator/(const Cyc& a, const Cyc& b) {
  const int m = lcm_int(a.order_, b.order_);
  return a.lifted(m) * b.lifted(m).inv();
}

std::complex<double> Cyc::approx() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 2.0 * M_PI / order_;
  for (int k = 0; k < order_; ++k) {
    if (c_[k] == 0) continue;
    acc += c_[k].get_d() * std::complex<double>(std::cos(tau * k), std::sin(tau * k));
  }
  return acc;
}

std::string Cyc::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < order_; ++k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ocs
