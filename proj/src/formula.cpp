#include "ebi/formula.hpp"

namespace ebi {

EbiParams compute_params(const Instance& instance) {
  const int m = instance.m;
  const int n = instance.n;
  // Exact integer ceilings: ceil((m-1)/(n+1)) = floor(((m-1)+n)/(n+1)).
  const int k = (m - 1 + n) / (n + 1);
  const int j = (n - 1 + m) / (m + 1);
  const int max_index = (n == 1) ? 2 : m + n - 2 * k - 2;
  return EbiParams{instance, k, j, max_index};
}

IndexSet ebi_set(const Instance& instance) {
  IndexSet set;
  if (instance.n == 1) {
    set.values = {2};
    return set;
  }
  const EbiParams p = compute_params(instance);
  for (int v = 0; v <= p.max_index; v += 2) set.values.push_back(v);
  return set;
}

}  // namespace ebi
