#include "ocs/stable.hpp"

#include <stdexcept>
#include <string>

#include "ocs/class_function.hpp"
#include "ocs/os_algebra.hpp"

namespace ocs {

StableValue stable_inner_product(const Statistic& P, uint32_t i) {
  StableValue out;
  out.n_min = i > 0 ? i : 1;
  out.n_max = i + P.degree() + 3;

  for (uint32_t n = out.n_min; n <= out.n_max; ++n) {
    auto table = TypeTable::get(P.d(), n);
    OSContext os(P.d(), n, i);
    std::vector<std::vector<long long>> chars = os.graded_character(*table);
    ClassFunction phi = class_function_from_statistic(P, table);
    // the characters are integer-valued, so the Hermitian pairing with them
    // coincides with the plain bilinear one
    Cyc acc;
    for (size_t c = 0; c < table->types.size(); ++c)
      acc += Cyc(Rat(table->class_size[c])) *
             Cyc(Rat(static_cast<long>(chars[i][c]))) * phi.values[c];
    out.history.push_back(acc / Cyc(Rat(table->group_order)));
  }

  size_t run = 1;
  while (run < out.history.size() &&
         out.history[out.history.size() - 1 - run] == out.history.back())
    ++run;
  if (run < 2)
    throw std::runtime_error("no plateau for <" + P.text() + ", H^" +
                             std::to_string(i) + "> up to n = " +
                             std::to_string(out.n_max));
  out.value = out.history.back();
  out.run = static_cast<uint32_t>(run);
  out.onset = out.n_max - out.run + 1;
  return out;
}

}  // namespace ocs
