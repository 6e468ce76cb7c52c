#include "ocs/os_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ocs {

namespace {

// row-echelon elimination over Q(zeta); rows are modified in place.
// returns pivot column per retained row
std::vector<size_t> echelonize(std::vector<std::vector<Cyc>>& rows) {
  std::vector<size_t> pivots;
  std::vector<std::vector<Cyc>> kept;
  for (auto& row : rows) {
    for (size_t r = 0; r < kept.size(); ++r) {
      if (row[pivots[r]].is_zero()) continue;
      Cyc factor = row[pivots[r]] / kept[r][pivots[r]];
      for (size_t c = 0; c < row.size(); ++c) row[c] -= factor * kept[r][c];
    }
    size_t pivot = row.size();
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) { pivot = c; break; }
    if (pivot == row.size()) continue;
    kept.push_back(row);
    pivots.push_back(pivot);
  }
  rows = std::move(kept);
  return pivots;
}

int inversion_parity(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  // parity of #{(x, y) in a x b : x > y}
  int inv = 0;
  for (uint8_t x : a)
    for (uint8_t y : b)
      if (x > y) inv ^= 1;
  return inv;
}

}  // namespace

OSContext::OSContext(uint32_t d, uint32_t n, uint32_t max_degree)
    : arr_(d, n), max_degree_(max_degree) {
  if (max_degree > 8) throw std::invalid_argument("monomial degree budget is 8");
  if (arr_.size() > 254) throw std::invalid_argument("arrangement too large (>254 planes)");
  for (const HPlane& h : arr_.planes()) normals_.push_back(arr_.normal(h));

  const uint8_t N = static_cast<uint8_t>(arr_.size());
  nbc_.resize(max_degree_ + 1);
  nbc_index_.resize(max_degree_ + 1);
  nbc_[0].push_back({});
  nbc_index_[0][key_of({})] = 0;

  // enumerate independent subsets in lex order; subsets of independent sets
  // are independent, so depth-first extension misses nothing
  std::vector<std::vector<uint8_t>> independents{{}};
  std::vector<uint8_t> cur;
  auto dfs = [&](auto&& self, uint8_t start) -> void {
    for (uint8_t next = start; next < N; ++next) {
      cur.push_back(next);
      if (independent(cur)) {
        independents.push_back(cur);
        if (cur.size() < max_degree_) self(self, next + 1);
      }
      cur.pop_back();
    }
  };
  if (max_degree_ >= 1) dfs(dfs, 0);

  for (const auto& S : independents) {
    if (S.empty()) continue;
    bool is_nbc = true;
    for (uint32_t x = 0; is_nbc && x < S.back(); ++x) {
      if (std::binary_search(S.begin(), S.end(), static_cast<uint8_t>(x))) continue;
      std::vector<uint8_t> above(std::upper_bound(S.begin(), S.end(),
                                                  static_cast<uint8_t>(x)),
                                 S.end());
      if (spans(above, x)) is_nbc = false;
    }
    if (is_nbc) {
      auto& level = nbc_[S.size()];
      nbc_index_[S.size()][key_of(S)] = static_cast<uint32_t>(level.size());
      level.push_back(S);
    }
  }

  // prefill the straightening memo so later reads are lock-free
  for (const auto& S : independents) straighten(S);
}

uint64_t OSContext::key_of(const std::vector<uint8_t>& S) {
  uint64_t key = 0;
  for (size_t t = 0; t < S.size(); ++t)
    key |= static_cast<uint64_t>(S[t] + 1) << (8 * t);
  return key;
}

bool OSContext::independent(const std::vector<uint8_t>& S) const {
  std::vector<std::vector<Cyc>> rows;
  rows.reserve(S.size());
  for (uint8_t s : S) rows.push_back(normals_[s]);
  echelonize(rows);
  return rows.size() == S.size();
}

bool OSContext::spans(const std::vector<uint8_t>& T, uint32_t x) const {
  std::vector<std::vector<Cyc>> rows;
  rows.reserve(T.size() + 1);
  for (uint8_t s : T) rows.push_back(normals_[s]);
  size_t base = echelonize(rows).size();
  rows.push_back(normals_[x]);
  std::vector<size_t> pivots = echelonize(rows);
  return pivots.size() == base;
}

const OSContext::Expansion& OSContext::straighten(const std::vector<uint8_t>& S) const {
  uint64_t key = key_of(S);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  return straighten_uncached(S, key);
}

const OSContext::Expansion& OSContext::straighten_uncached(
    const std::vector<uint8_t>& S, uint64_t key) const {
  if (S.size() > max_degree_) throw std::invalid_argument("degree exceeds budget");
  if (!independent(S)) return memo_.emplace(key, Expansion{}).first->second;

  auto hit = nbc_index_[S.size()].find(key);
  if (hit != nbc_index_[S.size()].end())
    return memo_.emplace(key, Expansion{{hit->second, 1}}).first->second;

  // S is independent but contains a broken circuit: the smallest x outside S
  // lying in the span of the planes of S above it closes a circuit there
  uint32_t x = arr_.size();
  std::vector<uint8_t> above;
  for (uint32_t cand = 0; cand < S.back(); ++cand) {
    if (std::binary_search(S.begin(), S.end(), static_cast<uint8_t>(cand))) continue;
    above.assign(std::upper_bound(S.begin(), S.end(), static_cast<uint8_t>(cand)),
                 S.end());
    if (spans(above, cand)) { x = cand; break; }
  }
  if (x == arr_.size()) throw std::logic_error("no broken circuit in non-NBC set");

  // shrink to the minimal support T of a circuit {x} < c_1 < ... < c_p
  std::vector<uint8_t> T = above;
  for (size_t y = T.size(); y-- > 0;) {
    std::vector<uint8_t> trial = T;
    trial.erase(trial.begin() + static_cast<long>(y));
    if (spans(trial, x)) T = std::move(trial);
  }

  std::vector<uint8_t> A;   // S \ T, ascending
  std::set_difference(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(A));
  const int eps = inversion_parity(A, T);

  std::map<uint32_t, long long> acc;
  for (size_t j = 1; j <= T.size(); ++j) {
    // D_j = circuit minus its j-th element above x, still ascending
    std::vector<uint8_t> D;
    D.push_back(static_cast<uint8_t>(x));
    for (size_t t = 0; t < T.size(); ++t)
      if (t != j - 1) D.push_back(T[t]);
    long long sign = ((j - 1) & 1) ? -1 : 1;
    if (eps) sign = -sign;
    if (inversion_parity(A, D)) sign = -sign;
    std::vector<uint8_t> R;
    std::merge(A.begin(), A.end(), D.begin(), D.end(), std::back_inserter(R));
    for (const auto& [idx, coeff] : straighten(R)) acc[idx] += sign * coeff;
  }

  Expansion out;
  for (const auto& [idx, coeff] : acc)
    if (coeff != 0) out.emplace_back(idx, coeff);
  return memo_.emplace(key, std::move(out)).first->second;
}

long long OSContext::character_value(uint32_t p, const WreathElem& w) const {
  if (p > max_degree_) throw std::invalid_argument("degree exceeds budget");
  std::vector<uint32_t> pi = arr_.act_indices(w);
  long long trace = 0;
  std::vector<uint8_t> image;
  for (uint32_t idx = 0; idx < nbc_[p].size(); ++idx) {
    const auto& S = nbc_[p][idx];
    image.clear();
    for (uint8_t s : S) image.push_back(static_cast<uint8_t>(pi[s]));
    int tau = 0;
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) tau ^= 1;
    std::sort(image.begin(), image.end());
    const Expansion& exp = straighten(image);
    auto it = std::lower_bound(exp.begin(), exp.end(), idx,
                               [](const auto& e, uint32_t v) { return e.first < v; });
    if (it != exp.end() && it->first == idx) trace += tau ? -it->second : it->second;
  }
  return trace;
}

std::vector<std::vector<long long>> OSContext::graded_character(
    const TypeTable& table) const {
  if (table.d != d() || table.n != n())
    throw std::invalid_argument("type table does not match arrangement");
  std::vector<std::vector<long long>> out(
      max_degree_ + 1, std::vector<long long>(table.types.size(), 0));
  const long long nclasses = static_cast<long long>(table.types.size());
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < nclasses; ++c) {
    WreathElem w = wreath_representative(table.types[c], d());
    for (uint32_t p = 0; p <= max_degree_; ++p)
      out[p][c] = character_value(p, w);
  }
  return out;
}

std::vector<std::vector<long long>> OSContext::action_matrix(
    uint32_t p, const WreathElem& w) const {
  if (p > max_degree_) throw std::invalid_argument("degree exceeds budget");
  std::vector<uint32_t> pi = arr_.act_indices(w);
  const size_t dim = nbc_[p].size();
  std::vector<std::vector<long long>> M(dim, std::vector<long long>(dim, 0));
  for (uint32_t col = 0; col < dim; ++col) {
    std::vector<uint8_t> image;
    for (uint8_t s : nbc_[p][col]) image.push_back(static_cast<uint8_t>(pi[s]));
    int tau = 0;
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) tau ^= 1;
    std::sort(image.begin(), image.end());
    for (const auto& [row, coeff] : straighten(image))
      M[row][col] = tau ? -coeff : coeff;
  }
  return M;
}

mpz_class OSContext::invariant_dimension(uint32_t p, const TypeTable& table) const {
  std::vector<std::vector<long long>> chars = graded_character(table);
  mpz_class total = 0;
  for (size_t c = 0; c < table.types.size(); ++c)
    total += table.class_size[c] * static_cast<long>(chars[p][c]);
  mpz_class dim, rem;
  mpz_fdiv_qr(dim.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(),
              table.group_order.get_mpz_t());
  if (rem != 0) throw std::logic_error("invariant dimension is not an integer");
  return dim;
}

}  // namespace ocs
