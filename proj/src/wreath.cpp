#include "ocs/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ocs {

WreathElem WreathElem::identity(uint32_t d, uint32_t n) {
  WreathElem e;
  e.d = d;
  e.labels.assign(n, 0);
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

WreathElem wreath_mul(const WreathElem& a, const WreathElem& b) {
  if (a.d != b.d || a.n() != b.n())
    throw std::invalid_argument("wreath elements from different groups");
  const uint32_t n = a.n();
  WreathElem c;
  c.d = a.d;
  c.labels.resize(n);
  c.perm.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.labels[i] = (a.labels[b.perm[i]] + b.labels[i]) % a.d;
  }
  return c;
}

WreathElem wreath_inv(const WreathElem& a) {
  const uint32_t n = a.n();
  WreathElem r;
  r.d = a.d;
  r.labels.resize(n);
  r.perm.resize(n);
  for (uint32_t i = 0; i < n; ++i) r.perm[a.perm[i]] = i;
  for (uint32_t i = 0; i < n; ++i)
    r.labels[i] = (a.d - a.labels[r.perm[i]]) % a.d;
  return r;
}

LabeledCycleType wreath_type(const WreathElem& a) {
  const uint32_t n = a.n();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<uint32_t, uint32_t>> raw;
  for (uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    uint32_t len = 0, label = 0, j = i;
    do {
      seen[j] = true;
      label = (label + a.labels[j]) % a.d;
      j = a.perm[j];
      ++len;
    } while (j != i);
    raw.emplace_back(len, label);
  }
  return LabeledCycleType::from_parts(std::move(raw));
}

WreathElem wreath_representative(const LabeledCycleType& t, uint32_t d) {
  const uint32_t n = t.weight();
  WreathElem w = WreathElem::identity(d, n);
  uint32_t base = 0;
  for (const auto& part : t.parts) {
    for (uint32_t rep = 0; rep < part.mult; ++rep) {
      for (uint32_t j = 0; j + 1 < part.len; ++j) w.perm[base + j] = base + j + 1;
      w.perm[base + part.len - 1] = base;
      w.labels[base] = part.label % d;
      base += part.len;
    }
  }
  return w;
}

std::vector<WreathElem> wreath_all_elements(uint32_t d, uint32_t n) {
  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t dn = 1;
  for (uint32_t k = 0; k < n; ++k) dn *= d;
  std::vector<WreathElem> out;
  do {
    for (uint64_t mask = 0; mask < dn; ++mask) {
      WreathElem w;
      w.d = d;
      w.perm = perm;
      w.labels.resize(n);
      uint64_t rest = mask;
      for (uint32_t k = 0; k < n; ++k) {
        w.labels[k] = static_cast<uint32_t>(rest % d);
        rest /= d;
      }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ocs
