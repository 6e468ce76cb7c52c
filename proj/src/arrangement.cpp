#include "ocs/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocs {

Arrangement::Arrangement(uint32_t d, uint32_t n) : d_(d), n_(n) {
  if (d == 0 || n == 0) throw std::invalid_argument("d and n must be positive");
  for (uint32_t i = 0; i < n; ++i)
    planes_.push_back(HPlane{HPlane::Kind::Coord, i, 0, 0});
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      for (uint32_t k = 0; k < d; ++k)
        planes_.push_back(HPlane{HPlane::Kind::Diff, i, j, k});
}

size_t Arrangement::index_of(const HPlane& h) const {
  if (h.kind == HPlane::Kind::Coord) {
    if (h.i >= n_) throw std::invalid_argument("no such hyperplane");
    return h.i;
  }
  if (h.i >= h.j || h.j >= n_ || h.k >= d_)
    throw std::invalid_argument("no such hyperplane");
  // Diff blocks in (i, j) lex order, d planes per pair
  size_t pair_rank = 0;
  for (uint32_t a = 0; a < h.i; ++a) pair_rank += n_ - 1 - a;
  pair_rank += h.j - h.i - 1;
  return n_ + pair_rank * d_ + h.k;
}

HPlane Arrangement::act(const WreathElem& w, const HPlane& h) const {
  if (w.d != d_ || w.n() != n_) throw std::invalid_argument("group/arrangement mismatch");
  if (h.kind == HPlane::Kind::Coord)
    return HPlane{HPlane::Kind::Coord, w.perm[h.i], 0, 0};
  uint32_t si = w.perm[h.i], sj = w.perm[h.j];
  uint32_t twist = (h.k + w.labels[h.i] + d_ - w.labels[h.j]) % d_;
  if (si < sj) return HPlane{HPlane::Kind::Diff, si, sj, twist};
  return HPlane{HPlane::Kind::Diff, sj, si, (d_ - twist) % d_};
}

std::vector<uint32_t> Arrangement::act_indices(const WreathElem& w) const {
  std::vector<uint32_t> out(planes_.size());
  for (size_t a = 0; a < planes_.size(); ++a)
    out[a] = static_cast<uint32_t>(index_of(act(w, planes_[a])));
  return out;
}

std::vector<Cyc> Arrangement::normal(const HPlane& h) const {
  std::vector<Cyc> v(n_);
  if (h.kind == HPlane::Kind::Coord) {
    v[h.i] = Cyc(1L);
  } else {
    v[h.i] = Cyc(1L);
    v[h.j] = -Cyc::zeta(static_cast<int>(d_), h.k);
  }
  return v;
}

}  // namespace ocs
