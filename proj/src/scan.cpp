#include "ocs/scan.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "ocs/irreducibles.hpp"
#include "ocs/polyspace.hpp"

namespace ocs {

namespace {

constexpr uint32_t kMaxN = 31;
constexpr size_t kBuf = 2 * kMaxN + 2;

// dense byte arithmetic bound to one field
struct Tables {
  const uint8_t* add;
  const uint8_t* mul;
  const uint8_t* neg;
  const uint8_t* lg;
  uint32_t q;
  uint32_t p;   // characteristic, for derivatives
  std::array<uint8_t, 256> inv;

  explicit Tables(const FieldTable& F)
      : add(F.add_table()), mul(F.mul_table()), neg(F.neg_table()),
        lg(F.dlog_table()), q(F.q()), p(F.p()) {
    inv.fill(0);
    for (uint32_t a = 1; a < q; ++a) inv[a] = static_cast<uint8_t>(F.inv(a));
  }

  uint8_t a(uint8_t x, uint8_t y) const { return add[x * q + y]; }
  uint8_t s(uint8_t x, uint8_t y) const { return add[x * q + neg[y]]; }
  uint8_t m(uint8_t x, uint8_t y) const { return mul[x * q + y]; }
};

// polynomials are (coeff buffer, degree); degree -1 encodes zero
using Buf = std::array<uint8_t, kBuf>;

int trim(const Buf& w, int deg) {
  while (deg >= 0 && w[deg] == 0) --deg;
  return deg;
}

uint8_t eval(const Tables& T, const Buf& w, int deg, uint8_t x) {
  uint8_t acc = 0;
  for (int k = deg; k >= 0; --k) acc = T.a(T.m(acc, x), w[k]);
  return acc;
}

// divide by (t - root) in place; caller guarantees the root
void strip_root(const Tables& T, Buf& w, int deg, uint8_t root) {
  uint8_t carry = w[deg];
  for (int k = deg - 1; k >= 0; --k) {
    uint8_t next = T.a(w[k], T.m(carry, root));
    w[k] = carry;
    carry = next;
  }
  // carry is the remainder w(root) = 0
}

// r := a mod b (in place on a); returns new degree of r
int mod_inplace(const Tables& T, Buf& a, int adeg, const Buf& b, int bdeg) {
  assert(bdeg >= 0);
  uint8_t lead_inv = T.inv[b[bdeg]];
  for (int k = adeg; k >= bdeg; --k) {
    uint8_t factor = T.m(a[k], lead_inv);
    if (factor == 0) continue;
    for (int j = 0; j <= bdeg; ++j)
      a[k - bdeg + j] = T.s(a[k - bdeg + j], T.m(factor, b[j]));
  }
  return trim(a, bdeg - 1);
}

// a := a / b exactly; returns quotient degree
int div_exact(const Tables& T, Buf& a, int adeg, const Buf& b, int bdeg) {
  Buf quo{};
  uint8_t lead_inv = T.inv[b[bdeg]];
  for (int k = adeg; k >= bdeg; --k) {
    uint8_t factor = T.m(a[k], lead_inv);
    quo[k - bdeg] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= bdeg; ++j)
      a[k - bdeg + j] = T.s(a[k - bdeg + j], T.m(factor, b[j]));
  }
  a = quo;
  return adeg - bdeg;
}

// monic gcd into g; returns degree
int gcd(const Tables& T, Buf a, int adeg, Buf b, int bdeg, Buf& g) {
  while (bdeg >= 0) {
    adeg = mod_inplace(T, a, adeg, b, bdeg);
    std::swap(a, b);
    std::swap(adeg, bdeg);
  }
  g = a;
  if (adeg >= 0 && a[adeg] != 1) {
    uint8_t lead_inv = T.inv[a[adeg]];
    for (int k = 0; k <= adeg; ++k) g[k] = T.m(g[k], lead_inv);
  }
  return adeg;
}

// r := u^q mod w
void pow_q_mod(const Tables& T, const Buf& u, int udeg, const Buf& w, int wdeg,
               Buf& r, int& rdeg) {
  Buf base = u;
  int bdeg = udeg;
  r.fill(0);
  r[0] = 1;
  rdeg = 0;
  uint32_t e = T.q;
  Buf prod{};
  auto mulmod = [&](const Buf& x, int xdeg, const Buf& y, int ydeg, Buf& out,
                    int& outdeg) {
    prod.fill(0);
    if (xdeg < 0 || ydeg < 0) { out = prod; outdeg = -1; return; }
    for (int i = 0; i <= xdeg; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j <= ydeg; ++j)
        prod[i + j] = T.a(prod[i + j], T.m(x[i], y[j]));
    }
    outdeg = mod_inplace(T, prod, xdeg + ydeg, w, wdeg);
    out = prod;
  };
  while (e > 0) {
    if (e & 1) mulmod(r, rdeg, base, bdeg, r, rdeg);
    e >>= 1;
    if (e > 0) mulmod(base, bdeg, base, bdeg, base, bdeg);
  }
}

// sorted (len, label) parts of one polynomial, fixed-size census key
struct TypeKey {
  std::array<uint8_t, 2 * kMaxN + 2> bytes{};
  uint8_t count = 0;

  void add(uint8_t len, uint8_t label) {
    // insertion sort by (len, label)
    int pos = count;
    while (pos > 0 && (bytes[2 * pos - 2] > len ||
                       (bytes[2 * pos - 2] == len && bytes[2 * pos - 1] > label))) {
      bytes[2 * pos] = bytes[2 * pos - 2];
      bytes[2 * pos + 1] = bytes[2 * pos - 1];
      --pos;
    }
    bytes[2 * pos] = len;
    bytes[2 * pos + 1] = label;
    ++count;
  }

  friend bool operator<(const TypeKey& a, const TypeKey& b) {
    if (a.count != b.count) return a.count < b.count;
    return a.bytes < b.bytes;
  }

  LabeledCycleType to_type() const {
    std::vector<std::pair<uint32_t, uint32_t>> raw;
    for (uint8_t t = 0; t < count; ++t)
      raw.emplace_back(bytes[2 * t], bytes[2 * t + 1]);
    return LabeledCycleType::from_parts(std::move(raw));
  }
};

struct ShardCensus {
  std::map<TypeKey, uint64_t> counts;
  uint64_t poly_count = 0;
};

// irreducibles of one degree as byte buffers, for equal-degree splitting
struct Sieve {
  std::vector<std::vector<Buf>> by_degree;
  std::vector<std::vector<uint8_t>> label_of;   // parallel to by_degree

  Sieve(const FieldTable& F, uint32_t d, uint32_t max_deg) {
    IrreducibleTable table = IrreducibleTable::build(F, max_deg);
    by_degree.resize(max_deg + 1);
    label_of.resize(max_deg + 1);
    for (uint32_t deg = 2; deg <= max_deg; ++deg) {
      for (const PolyFq& p : table.by_degree[deg]) {
        if (p.coeff(0) == 0) continue;   // t itself never divides a candidate
        Buf b{};
        for (uint32_t k = 0; k <= deg; ++k)
          b[k] = static_cast<uint8_t>(p.coeff(k));
        by_degree[deg].push_back(b);
        label_of[deg].push_back(static_cast<uint8_t>(root_label(p, d)));
      }
    }
  }
};

// census of one contiguous candidate-index range
ShardCensus scan_shard(const Tables& T, const Sieve& sieve, uint32_t d,
                       uint32_t n, uint64_t lo, uint64_t hi) {
  ShardCensus out;
  const uint32_t q = T.q;

  // digits of the candidate index: digit[0] = c_0 - 1 (constant term),
  // digit[k] = c_k; digit[n-1] is least significant
  std::vector<uint8_t> digit(n, 0);
  uint64_t rest = lo;
  for (uint32_t k = n; k-- > 0;) {
    digit[k] = static_cast<uint8_t>(rest % q);
    rest /= q;
  }
  Buf w{};
  Buf wp{};    // derivative
  Buf g{};
  Buf u{};
  Buf diff{};

  for (uint64_t index = lo; index < hi; ++index) {
    // materialize the candidate: monic, constant term digit[0]+1
    w.fill(0);
    w[0] = static_cast<uint8_t>(digit[0] + 1);
    for (uint32_t k = 1; k < n; ++k) w[k] = digit[k];
    w[n] = 1;
    for (uint32_t k = n; k-- > 0;) {
      if (++digit[k] < q) break;
      digit[k] = 0;
    }

    TypeKey key;
    int wdeg = static_cast<int>(n);
    bool reject = false;

    // strip roots in F_q^*
    for (uint32_t a = 1; a < q && !reject; ++a) {
      if (eval(T, w, wdeg, static_cast<uint8_t>(a)) != 0) continue;
      strip_root(T, w, wdeg, static_cast<uint8_t>(a));
      --wdeg;
      if (eval(T, w, wdeg, static_cast<uint8_t>(a)) == 0) { reject = true; break; }
      key.add(1, static_cast<uint8_t>(T.lg[a] % d));
    }
    if (reject) continue;

    if (wdeg >= 4) {
      // squarefree filter: gcd with the derivative (scalar k lives in the
      // prime field, so reduce the exponent mod the characteristic)
      wp.fill(0);
      for (int k = 1; k <= wdeg; ++k)
        wp[k - 1] = T.m(w[k], static_cast<uint8_t>(k % T.p));
      int wpdeg = trim(wp, wdeg - 1);
      if (wpdeg < 0) continue;   // p-th power
      if (gcd(T, w, wdeg, wp, wpdeg, g) > 0) continue;

      // distinct-degree splitting; degree-1 factors are already gone
      u.fill(0);
      u[1] = 1;
      int udeg = 1;
      pow_q_mod(T, u, udeg, w, wdeg, u, udeg);   // t^q
      uint32_t k = 1;
      while (wdeg >= static_cast<int>(2 * (k + 1))) {
        ++k;
        pow_q_mod(T, u, udeg, w, wdeg, u, udeg);   // t^{q^k} mod w
        diff = u;
        int ddeg = std::max(udeg, 1);
        diff[1] = T.s(diff[1], 1);
        ddeg = trim(diff, ddeg);
        if (ddeg < 0) {
          // every remaining factor has degree dividing k, hence exactly k
          ddeg = wdeg;
          g = w;
        } else {
          int gdeg = gcd(T, diff, ddeg, w, wdeg, g);
          if (gdeg <= 0) continue;
          ddeg = gdeg;
        }
        // g = product of the degree-k irreducible factors
        wdeg = (ddeg == wdeg) ? 0 : div_exact(T, w, wdeg, g, ddeg);
        int remaining = ddeg;
        if (remaining == static_cast<int>(k)) {
          uint8_t c0 = (k & 1) ? T.neg[g[0]] : g[0];
          key.add(static_cast<uint8_t>(k), static_cast<uint8_t>(T.lg[c0] % d));
        } else {
          // several degree-k factors: split against the sieve
          Buf rem = g;
          for (size_t s = 0; s < sieve.by_degree[k].size() && remaining > static_cast<int>(k); ++s) {
            const Buf& p = sieve.by_degree[k][s];
            Buf trial = rem;
            if (mod_inplace(T, trial, remaining, p, static_cast<int>(k)) >= 0) continue;
            remaining = div_exact(T, rem, remaining, p, static_cast<int>(k));
            key.add(static_cast<uint8_t>(k), sieve.label_of[k][s]);
          }
          if (remaining != static_cast<int>(k))
            throw std::logic_error("equal-degree split failed");
          uint8_t c0 = (k & 1) ? T.neg[rem[0]] : rem[0];
          key.add(static_cast<uint8_t>(k), static_cast<uint8_t>(T.lg[c0] % d));
        }
        if (wdeg == 0) break;
        udeg = mod_inplace(T, u, udeg, w, wdeg);
      }
    }
    if (wdeg == 1) throw std::logic_error("linear cofactor survived root stripping");
    if (wdeg > 0) {
      // rootless of degree 2 or 3 is irreducible; larger survivors of the
      // splitting loop are irreducible too
      uint8_t c0 = (wdeg & 1) ? T.neg[w[0]] : w[0];
      key.add(static_cast<uint8_t>(wdeg), static_cast<uint8_t>(T.lg[c0] % d));
    }
    out.counts[key] += 1;
    out.poly_count += 1;
  }
  return out;
}

}  // namespace

ScanResult scan_reference(const FieldTable& F, uint32_t d, uint32_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if ((F.q() - 1) % d != 0) throw std::invalid_argument("d must divide q-1");
  IrreducibleTable table = IrreducibleTable::build(F, n);
  ScanResult out;
  out.candidates = polyspace_candidates(F.q(), n);
  enumerate_polyspace(F, n, 0, 1, [&](const PolyFq& f) {
    out.counts[frobenius_type(f, d, table)] += 1;
    out.poly_count += 1;
    return true;
  });
  return out;
}

ScanResult scan_census(const FieldTable& F, uint32_t d, uint32_t n,
                       uint32_t nshards) {
  if (n == 0 || n > kMaxN) throw std::invalid_argument("n out of kernel range");
  if ((F.q() - 1) % d != 0) throw std::invalid_argument("d must divide q-1");
  if (nshards == 0) throw std::invalid_argument("nshards must be positive");
  if (!F.has_byte_tables())
    throw std::invalid_argument("scan kernel requires q <= 256");

  Tables T(F);
  Sieve sieve(F, d, std::max(1u, n / 2));
  const uint64_t total = polyspace_candidates(F.q(), n);

  std::vector<ShardCensus> partial(nshards);
  const long long shards = static_cast<long long>(nshards);
#pragma omp parallel for schedule(dynamic)
  for (long long s = 0; s < shards; ++s) {
    uint64_t lo = total * static_cast<uint64_t>(s) / nshards;
    uint64_t hi = total * (static_cast<uint64_t>(s) + 1) / nshards;
    partial[static_cast<size_t>(s)] = scan_shard(T, sieve, d, n, lo, hi);
  }

  // merge in shard order
  ScanResult out;
  out.candidates = total;
  std::map<TypeKey, uint64_t> merged;
  for (const ShardCensus& shard : partial) {
    out.poly_count += shard.poly_count;
    for (const auto& [key, cnt] : shard.counts) merged[key] += cnt;
  }
  for (const auto& [key, cnt] : merged) out.counts[key.to_type()] = cnt;
  return out;
}

}  // namespace ocs
