#include "ocs/polyspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ocs {

uint64_t polyspace_candidates(uint32_t q, uint32_t n) {
  if (n == 0) return 1;
  uint64_t total = q - 1;
  for (uint32_t k = 1; k < n; ++k) {
    if (total > (uint64_t{1} << 62) / q)
      throw std::invalid_argument("candidate space exceeds 2^62");
    total *= q;
  }
  return total;
}

PolyFq poly_from_index(const FieldTable& F, uint32_t n, uint64_t index) {
  if (index >= polyspace_candidates(F.q(), n))
    throw std::out_of_range("candidate index out of range");
  std::vector<uint32_t> c(n + 1, 0);
  c[n] = 1;
  if (n == 0) return PolyFq(F, std::move(c));
  uint64_t qpow = 1;   // q^{n-1}
  for (uint32_t k = 1; k < n; ++k) qpow *= F.q();
  c[0] = static_cast<uint32_t>(index / qpow) + 1;
  uint64_t rest = index % qpow;
  for (uint32_t k = n - 1; k >= 1; --k) {
    c[k] = static_cast<uint32_t>(rest % F.q());
    rest /= F.q();
  }
  return PolyFq(F, std::move(c));
}

bool in_polyspace(const PolyFq& f) {
  if (!f.is_monic() || f.coeff(0) == 0) return false;
  if (f.deg() <= 1) return true;
  return poly_gcd(f, f.derivative()).deg() == 0;
}

void enumerate_polyspace(const FieldTable& F, uint32_t n, uint32_t shard,
                         uint32_t nshards,
                         const std::function<bool(const PolyFq&)>& visit) {
  if (nshards == 0 || shard >= nshards)
    throw std::invalid_argument("bad shard index");
  const uint64_t total = polyspace_candidates(F.q(), n);
  const uint64_t lo = total * shard / nshards;
  const uint64_t hi = total * (shard + 1) / nshards;
  for (uint64_t i = lo; i < hi; ++i) {
    PolyFq f = poly_from_index(F, n, i);
    if (in_polyspace(f) && !visit(f)) return;
  }
}

std::vector<PolyFq> collect_polyspace(const FieldTable& F, uint32_t n) {
  std::vector<PolyFq> out;
  enumerate_polyspace(F, n, 0, 1, [&](const PolyFq& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<PolyFq> factorize(const PolyFq& f, const IrreducibleTable& table) {
  if (f.is_zero()) throw std::domain_error("factorize(0)");
  std::vector<PolyFq> out;
  PolyFq rem = f.monic();
  for (int deg = 1; deg <= rem.deg() / 2; ++deg) {
    if (deg >= static_cast<int>(table.by_degree.size()))
      throw std::invalid_argument("irreducible table too shallow for factorize");
    for (const PolyFq& p : table.by_degree[deg]) {
      if (deg > rem.deg() / 2) break;
      while (true) {
        auto [quo, r] = poly_divrem(rem, p);
        if (!r.is_zero()) break;
        out.push_back(p);
        rem = quo;
      }
    }
  }
  if (rem.deg() >= 1) out.push_back(rem);
  std::sort(out.begin(), out.end());
  return out;
}

LabeledCycleType frobenius_type(const PolyFq& f, uint32_t d,
                                const IrreducibleTable& table) {
  std::vector<std::pair<uint32_t, uint32_t>> raw;
  for (const PolyFq& p : factorize(f, table))
    raw.emplace_back(static_cast<uint32_t>(p.deg()), root_label(p, d));
  return LabeledCycleType::from_parts(std::move(raw));
}

int delta_indicator(const LabeledCycleType& t) {
  return t.all_labels_zero() ? 1 : 0;
}

namespace {

// next coefficient vector of bounded degree, odometer order; false at wrap
bool next_poly(std::vector<uint32_t>& c, uint32_t q) {
  for (auto& digit : c) {
    if (++digit < q) return true;
    digit = 0;
  }
  return false;
}

PolyFq pow_d(const PolyFq& g, uint32_t d) {
  PolyFq r = PolyFq::constant(g.field(), 1);
  for (uint32_t k = 0; k < d; ++k) r = r * g;
  return r;
}

}  // namespace

std::optional<NormFormWitness> norm_form_witness(const PolyFq& f, uint32_t d,
                                                 int sign) {
  const FieldTable& F = f.field();
  if (d == 0) throw std::invalid_argument("d must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const int n = f.deg();
  if (n < 0) return std::nullopt;
  // exhaustive search; this is an oracle, not a production path
  if (n > 6 || F.q() > 7)
    throw std::invalid_argument("norm_form_witness cap exceeded (deg <= 6, q <= 7)");
  const int gdeg = n / static_cast<int>(d);
  const int hdeg = (n - 1) / static_cast<int>(d);   // from 1 + d*deg h <= n
  const PolyFq t = PolyFq::t(F);
  std::vector<uint32_t> gc(gdeg + 1, 0);
  do {
    PolyFq g(F, gc);
    PolyFq gd = pow_d(g, d);
    std::vector<uint32_t> hc(hdeg + 1, 0);
    do {
      PolyFq h(F, hc);
      PolyFq th = t * pow_d(h, d);
      PolyFq cand = sign < 0 ? gd - th : gd + th;
      if (cand == f) return NormFormWitness{g, h, sign};
    } while (next_poly(hc, F.q()));
  } while (next_poly(gc, F.q()));
  return std::nullopt;
}

std::optional<NormFormWitness> norm_form_witness(const PolyFq& f, uint32_t d) {
  if (auto w = norm_form_witness(f, d, -1)) return w;
  return norm_form_witness(f, d, +1);
}

std::vector<PolyFq> norm_closure_census(const FieldTable& F, uint32_t d, uint32_t n) {
  if (d == 0 || (F.q() - 1) % d != 0)
    throw std::invalid_argument("d must divide q-1");
  const uint32_t q = F.q();
  const uint32_t zeta = F.exp((q - 1) / d);   // primitive d-th root of unity
  std::set<PolyFq> seen;
  // monic u of degree n in F_q[s]
  std::vector<uint32_t> uc(n, 0);
  bool more = true;
  while (more) {
    std::vector<uint32_t> u(uc);
    u.push_back(1);
    // N(u) = prod_j u(zeta^j s), a polynomial in t = s^d
    PolyFq prod = PolyFq::constant(F, 1);
    for (uint32_t j = 0; j < d; ++j) {
      std::vector<uint32_t> twisted(u.size());
      uint32_t zj = F.pow(zeta, j);
      uint32_t zjk = 1;
      for (size_t k = 0; k < u.size(); ++k) {
        twisted[k] = F.mul(u[k], zjk);
        zjk = F.mul(zjk, zj);
      }
      prod = prod * PolyFq(F, std::move(twisted));
    }
    std::vector<uint32_t> tc(n + 1, 0);
    for (int k = 0; k <= prod.deg(); ++k) {
      if (prod.coeff(k) == 0) continue;
      if (k % d != 0) throw std::logic_error("norm is not a polynomial in t");
      tc[k / d] = prod.coeff(k);
    }
    PolyFq nf = PolyFq(F, std::move(tc)).monic();   // unit-normalized
    if (in_polyspace(nf) && nf.deg() == static_cast<int>(n)) seen.insert(nf);
    more = next_poly(uc, q);
  }
  return std::vector<PolyFq>(seen.begin(), seen.end());
}

}  // namespace ocs
