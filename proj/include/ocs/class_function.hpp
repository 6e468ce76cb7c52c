#pragma once
// Class functions on W_n = (Z/d)^n x| S_n, stored as value vectors over the
// canonical TypeTable class list, with the Hermitian inner product
//   <a, b> = (1/|W_n|) sum_classes |class| a(t) conj(b(t)).

#include <memory>
#include <string>
#include <vector>

#include "ocs/cycle_types.hpp"
#include "ocs/cyclotomic.hpp"
#include "ocs/statistic.hpp"

namespace ocs {

struct ClassFunction {
  std::shared_ptr<const TypeTable> table;
  std::vector<Cyc> values;   // parallel to table->types
  std::string name;

  const Cyc& at(const LabeledCycleType& t) const {
    return values[table->index_of(t)];
  }
  ClassFunction conjugated() const;
};

ClassFunction class_function_from_statistic(const Statistic& s,
                                            std::shared_ptr<const TypeTable> table);
// indicator of the classes where every cycle carries label 0
ClassFunction delta_class_function(std::shared_ptr<const TypeTable> table);
ClassFunction constant_class_function(std::shared_ptr<const TypeTable> table,
                                      const Cyc& value);

Cyc inner_product(const ClassFunction& a, const ClassFunction& b);

}  // namespace ocs
