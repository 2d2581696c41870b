#include <random>

#include "doctest.h"
#include "ebi/formula.hpp"
#include "test_util.hpp"

using namespace ebi;

TEST_CASE("compute_params closed forms") {
  auto p = compute_params(Instance(1, 1));
  CHECK(p.k == 0);
  CHECK(p.j == 0);
  CHECK(p.max_index == 2);

  p = compute_params(Instance(7, 1));
  CHECK(p.k == 3);
  CHECK(p.j == 0);
  CHECK(p.max_index == 2);

  p = compute_params(Instance(5, 3));
  CHECK(p.k == 1);
  CHECK(p.j == 1);
  CHECK(p.max_index == 4);

  p = compute_params(Instance(9, 3));
  CHECK(p.k == 2);
  CHECK(p.j == 1);
  CHECK(p.max_index == 6);

  p = compute_params(Instance(5, 5));
  CHECK(p.k == 1);
  CHECK(p.max_index == 6);
}

TEST_CASE("ceiling arithmetic is exact over the sweep") {
  for (int m = 1; m <= 99; m += 2) {
    for (int n = 1; n <= m; n += 2) {
      const auto p = compute_params(Instance(m, n));
      // k is the least integer with k*(n+1) >= m-1, and likewise for j.
      CHECK(p.k * (n + 1) >= m - 1);
      if (p.k > 0) CHECK((p.k - 1) * (n + 1) < m - 1);
      CHECK(p.j * (m + 1) >= n - 1);
      if (p.j > 0) CHECK((p.j - 1) * (m + 1) < n - 1);
      CHECK(((p.k == 0) == (m == 1 && n == 1)));
      CHECK(p.j == (n == 1 ? 0 : 1));
      CHECK(p.max_index >= 0);
      CHECK(p.max_index % 2 == 0);
    }
  }
}

TEST_CASE("ebi_set values") {
  CHECK(ebi_set(Instance(5, 1)).values == std::vector<int>{2});
  CHECK(ebi_set(Instance(1, 1)).values == std::vector<int>{2});
  CHECK(ebi_set(Instance(3, 3)).values == std::vector<int>{0, 2});
  CHECK(ebi_set(Instance(5, 5)).values == std::vector<int>{0, 2, 4, 6});
  CHECK(ebi_set(Instance(5, 3)).values == std::vector<int>{0, 2, 4});
}

TEST_CASE("no edge-friendly labeling exceeds the closed-form maximum") {
  std::mt19937_64 rng(31337);
  for (const Instance inst : {Instance(3, 3), Instance(5, 3), Instance(7, 5), Instance(9, 1)}) {
    const int max_index = compute_params(inst).max_index;
    for (int i = 0; i < 500; ++i) {
      CHECK(counts(test::random_labeling(inst, rng)).index <= max_index);
    }
  }
}

TEST_CASE("ebi_set stays within bounds and attaches no witnesses") {
  for (int m = 1; m <= 31; m += 2) {
    for (int n = 1; n <= m; n += 2) {
      const Instance inst(m, n);
      const IndexSet set = ebi_set(inst);
      CHECK(set.witnesses.empty());
      CHECK(!set.values.empty());
      for (int v : set.values) {
        CHECK(v % 2 == 0);
        CHECK(v >= 0);
        CHECK(v <= m + n);
      }
      CHECK(set.values.back() == compute_params(inst).max_index);
    }
  }
}
