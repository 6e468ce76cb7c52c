#pragma once
// Conjugacy classes of the wreath product W_n = (Z/d)^n x| S_n.
//
// A class is a labeled cycle type: a multiset of parts (length, label) with
// lengths summing to n and labels in Z/d (for abelian Z/d the label of a
// cycle is the sum of the entries along the cycle, a conjugacy invariant).
// The centralizer of a class with multiplicities m_{i,c} has order
// prod_{i,c} m_{i,c}! * (i*d)^{m_{i,c}}, so
// |class| = d^n n! / centralizer.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ocs {

struct LabeledCycleType {
  // canonical form: sorted ascending by (len, label), one entry per part
  // occurrence is collapsed via multiplicity
  struct Part {
    uint32_t len;
    uint32_t label;
    uint32_t mult;
    friend auto operator<=>(const Part&, const Part&) = default;
  };
  std::vector<Part> parts;

  uint32_t weight() const;               // sum of len * mult
  uint32_t count(uint32_t len, uint32_t label) const;   // multiplicity
  bool all_labels_zero() const;
  std::string to_string() const;         // e.g. "(1,0)^2 (2,1)"

  // build from an unsorted list of (len, label) pairs
  static LabeledCycleType from_parts(std::vector<std::pair<uint32_t, uint32_t>> raw);

  friend auto operator<=>(const LabeledCycleType&, const LabeledCycleType&) = default;
};

// all labeled cycle types of weight n with labels in Z/d, together with
// class sizes, in canonical (sorted) order
struct TypeTable {
  uint32_t d = 1;
  uint32_t n = 0;
  std::vector<LabeledCycleType> types;
  std::vector<mpz_class> class_size;
  mpz_class group_order;                 // d^n n!
  std::map<LabeledCycleType, size_t> index;

  size_t index_of(const LabeledCycleType& t) const;   // throws if absent
  static std::shared_ptr<const TypeTable> get(uint32_t d, uint32_t n);  // cached
};

mpz_class centralizer_order(const LabeledCycleType& t, uint32_t d);

}  // namespace ocs
