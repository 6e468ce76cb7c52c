#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ocs/cycle_types.hpp"
#include "ocs/wreath.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

using ocs::LabeledCycleType;
using ocs::TypeTable;
using ocs::WreathElem;

namespace {

WreathElem random_elem(uint32_t d, uint32_t n, std::mt19937& rng) {
  WreathElem w;
  w.d = d;
  w.perm.resize(n);
  w.labels.resize(n);
  for (uint32_t i = 0; i < n; ++i) w.perm[i] = i;
  std::shuffle(w.perm.begin(), w.perm.end(), rng);
  for (uint32_t i = 0; i < n; ++i) w.labels[i] = rng() % d;
  return w;
}

}  // namespace

TEST_CASE("class sizes sum to the group order") {
  for (uint32_t d = 1; d <= 4; ++d)
    for (uint32_t n = 0; n <= 5; ++n) {
      auto table = TypeTable::get(d, n);
      mpz_class total = 0;
      for (size_t c = 0; c < table->types.size(); ++c) {
        CHECK(table->types[c].weight() == n);
        CHECK(table->class_size[c] > 0);
        total += table->class_size[c];
        // centralizer order times class size is the group order
        CHECK(ocs::centralizer_order(table->types[c], d) * table->class_size[c] ==
              table->group_order);
      }
      CHECK(total == table->group_order);
      // d^n n!
      mpz_class expect = 1;
      for (uint32_t k = 1; k <= n; ++k) expect *= k;
      for (uint32_t k = 0; k < n; ++k) expect *= d;
      CHECK(table->group_order == expect);
    }
}

TEST_CASE("type counts for two labels") {
  // weight-n types with labels in Z/2 are pairs of partitions by label;
  // the counts 2, 5, 10, 20, 36 are the standard convolution of p(k)
  std::vector<size_t> expect = {2, 5, 10, 20, 36};
  for (uint32_t n = 1; n <= 5; ++n)
    CHECK(TypeTable::get(2, n)->types.size() == expect[n - 1]);
}

TEST_CASE("group law: associativity, identity, inverses") {
  std::mt19937 rng(17);
  for (uint32_t d : {2u, 3u, 4u}) {
    WreathElem e = WreathElem::identity(d, 4);
    for (int trial = 0; trial < 40; ++trial) {
      WreathElem a = random_elem(d, 4, rng);
      WreathElem b = random_elem(d, 4, rng);
      WreathElem c = random_elem(d, 4, rng);
      CHECK(wreath_mul(wreath_mul(a, b), c) == wreath_mul(a, wreath_mul(b, c)));
      CHECK(wreath_mul(a, e) == a);
      CHECK(wreath_mul(e, a) == a);
      CHECK(wreath_mul(a, wreath_inv(a)) == e);
      CHECK(wreath_mul(wreath_inv(a), a) == e);
      // conjugation preserves the labeled cycle type
      WreathElem conj = wreath_mul(wreath_mul(b, a), wreath_inv(b));
      CHECK(wreath_type(conj) == wreath_type(a));
    }
  }
}

TEST_CASE("representatives round-trip through wreath_type") {
  for (uint32_t d : {1u, 2u, 3u})
    for (uint32_t n = 0; n <= 4; ++n) {
      auto table = TypeTable::get(d, n);
      for (const LabeledCycleType& t : table->types)
        CHECK(wreath_type(ocs::wreath_representative(t, d)) == t);
    }
}

TEST_CASE("class data matches full group enumeration") {
  // brute force: partition every element by its type and compare both the
  // class count and every class size with the formula-based table
  for (auto [d, nmax] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}}) {
    for (uint32_t n = 1; n <= nmax; ++n) {
      auto table = TypeTable::get(d, n);
      std::map<LabeledCycleType, uint64_t> census;
      std::vector<WreathElem> all = ocs::wreath_all_elements(d, n);
      CHECK(all.size() == table->group_order.get_ui());
      for (const WreathElem& w : all) ++census[wreath_type(w)];
      CHECK(census.size() == table->types.size());
      for (size_t c = 0; c < table->types.size(); ++c)
        CHECK(census.at(table->types[c]) == table->class_size[c].get_ui());
      // brute-force conjugacy: orbits of conjugation are exactly the types
      for (const WreathElem& w : all) {
        std::set<LabeledCycleType> orbit_types;
        for (const WreathElem& g : all)
          orbit_types.insert(
              wreath_type(wreath_mul(wreath_mul(g, w), wreath_inv(g))));
        CHECK(orbit_types.size() == 1);
      }
    }
  }
}

TEST_CASE("type text and part accessors") {
  LabeledCycleType t = LabeledCycleType::from_parts({{1, 0}, {2, 1}, {1, 0}});
  CHECK(t.to_string() == "(1,0)^2 (2,1)");
  CHECK(t.weight() == 4);
  CHECK(t.count(1, 0) == 2);
  CHECK(t.count(2, 1) == 1);
  CHECK(t.count(2, 0) == 0);
  CHECK(!t.all_labels_zero());
  CHECK(LabeledCycleType::from_parts({{3, 0}}).all_labels_zero());
}
