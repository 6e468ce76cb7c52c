#include "ocs/cycle_types.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ocs {

uint32_t LabeledCycleType::weight() const {
  uint32_t w = 0;
  for (const auto& p : parts) w += p.len * p.mult;
  return w;
}

uint32_t LabeledCycleType::count(uint32_t len, uint32_t label) const {
  for (const auto& p : parts)
    if (p.len == len && p.label == label) return p.mult;
  return 0;
}

bool LabeledCycleType::all_labels_zero() const {
  for (const auto& p : parts)
    if (p.label != 0) return false;
  return true;
}

std::string LabeledCycleType::to_string() const {
  if (parts.empty()) return "()";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) os << " ";
    os << "(" << p.len << "," << p.label << ")";
    if (p.mult > 1) os << "^" << p.mult;
    first = false;
  }
  return os.str();
}

LabeledCycleType LabeledCycleType::from_parts(
    std::vector<std::pair<uint32_t, uint32_t>> raw) {
  std::sort(raw.begin(), raw.end());
  LabeledCycleType t;
  for (const auto& [len, label] : raw) {
    if (!t.parts.empty() && t.parts.back().len == len && t.parts.back().label == label)
      ++t.parts.back().mult;
    else
      t.parts.push_back({len, label, 1});
  }
  return t;
}

mpz_class centralizer_order(const LabeledCycleType& t, uint32_t d) {
  mpz_class z = 1;
  for (const auto& p : t.parts) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), p.mult);
    mpz_class base = static_cast<unsigned long>(p.len) * d;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), p.mult);
    z *= fact * pw;
  }
  return z;
}

namespace {

void enumerate_types(uint32_t d, uint32_t remaining, uint32_t min_len,
                     uint32_t min_label_at_min_len,
                     std::vector<std::pair<uint32_t, uint32_t>>& acc,
                     std::vector<LabeledCycleType>& out) {
  if (remaining == 0) {
    out.push_back(LabeledCycleType::from_parts(acc));
    return;
  }
  for (uint32_t len = min_len; len <= remaining; ++len) {
    uint32_t label0 = (len == min_len) ? min_label_at_min_len : 0;
    for (uint32_t label = label0; label < d; ++label) {
      acc.emplace_back(len, label);
      enumerate_types(d, remaining - len, len, label, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

size_t TypeTable::index_of(const LabeledCycleType& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw std::invalid_argument("unknown labeled cycle type");
  return it->second;
}

std::shared_ptr<const TypeTable> TypeTable::get(uint32_t d, uint32_t n) {
  if (d == 0) throw std::invalid_argument("label modulus must be positive");
  static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const TypeTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(d, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto tab = std::make_shared<TypeTable>();
  tab->d = d;
  tab->n = n;
  std::vector<std::pair<uint32_t, uint32_t>> acc;
  enumerate_types(d, n, 1, 0, acc, tab->types);
  std::sort(tab->types.begin(), tab->types.end());

  mpz_class order;
  mpz_fac_ui(order.get_mpz_t(), n);
  mpz_class dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
  tab->group_order = order * dn;

  mpz_class total = 0;
  for (size_t k = 0; k < tab->types.size(); ++k) {
    tab->index.emplace(tab->types[k], k);
    mpz_class size = tab->group_order / centralizer_order(tab->types[k], d);
    tab->class_size.push_back(size);
    total += size;
  }
  if (total != tab->group_order)
    throw std::logic_error("class sizes do not sum to the group order");

  cache.emplace(key, tab);
  return tab;
}

}  // namespace ocs
