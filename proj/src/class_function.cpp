#include "ocs/class_function.hpp"

#include <stdexcept>

namespace ocs {

ClassFunction ClassFunction::conjugated() const {
  ClassFunction r;
  r.table = table;
  r.name = "conj(" + name + ")";
  r.values.reserve(values.size());
  for (const auto& v : values) r.values.push_back(v.conj());
  return r;
}

ClassFunction class_function_from_statistic(const Statistic& s,
                                            std::shared_ptr<const TypeTable> table) {
  if (s.d() != table->d)
    throw std::invalid_argument("statistic and type table have different label moduli");
  ClassFunction cf;
  cf.table = std::move(table);
  cf.name = s.text();
  cf.values.reserve(cf.table->types.size());
  for (const auto& t : cf.table->types) cf.values.push_back(s.evaluate(t));
  return cf;
}

ClassFunction delta_class_function(std::shared_ptr<const TypeTable> table) {
  ClassFunction cf;
  cf.table = std::move(table);
  cf.name = "delta";
  cf.values.reserve(cf.table->types.size());
  for (const auto& t : cf.table->types)
    cf.values.push_back(Cyc(Rat(t.all_labels_zero() ? 1 : 0)));
  return cf;
}

ClassFunction constant_class_function(std::shared_ptr<const TypeTable> table,
                                      const Cyc& value) {
  ClassFunction cf;
  cf.table = std::move(table);
  cf.name = value.to_string();
  cf.values.assign(cf.table->types.size(), value);
  return cf;
}

Cyc inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.table->d != b.table->d || a.table->n != b.table->n)
    throw std::invalid_argument("class functions on different groups");
  Cyc acc;
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (a.values[k].is_zero() || b.values[k].is_zero()) continue;
    Cyc size(Rat(a.table->class_size[k]));
    acc += size * a.values[k] * b.values[k].conj();
  }
  return acc * Cyc(Rat(mpz_class(1), a.table->group_order));
}

}  // namespace ocs
