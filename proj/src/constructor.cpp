#include "ebi/constructor.hpp"

#include <vector>

#include "ebi/formula.hpp"

namespace ebi {

int s_index(const Instance& instance, int k, int row, int pos) {
  const int m = instance.m;
  const int n = instance.n;
  if (n < 3) throw Error("s_index: defined only for n >= 3");
  if (row < 2 || row > n)
    throw Error("s_index: row must be in 2..n, got " + std::to_string(row));
  if (pos < 1 || pos > (m + 1) / 2)
    throw Error("s_index: pos must be in 1..(m+1)/2, got " + std::to_string(pos));
  const int cycle = m - k;
  const long long offset = 1LL * (row - 2) * ((m + 1) / 2) + (pos - 1);
  return static_cast<int>(offset % cycle) + k + 1;
}

int s1_index(const Instance& instance, int k, int pos) {
  const int m = instance.m;
  const int n = instance.n;
  if (n < 3) throw Error("s1_index: defined only for n >= 3");
  if (pos < 1 || pos > (m - n + 2) / 2)
    throw Error("s1_index: pos must be in 1..(m-n+2)/2, got " + std::to_string(pos));
  const int cycle = m - k;
  // s(n,(m+1)/2) is already a column in k+1..m, so the argument of the
  // modulus stays nonnegative.
  const int last = s_index(instance, k, n, (m + 1) / 2);
  return (last - k + pos - 1) % cycle + k + 1;
}

Labeling construct_max(const Instance& instance) {
  const int m = instance.m;
  const int n = instance.n;
  std::vector<Edge> one_edges;
  one_edges.reserve(static_cast<std::size_t>(instance.ones()));
  if (n == 1) {
    // K(1,1) falls out degenerately: zero 0-edges, the single edge gets 1.
    for (int col = (m + 1) / 2; col <= m; ++col) one_edges.push_back(Edge{1, col});
  } else {
    const int k = compute_params(instance).k;
    for (int row = 2; row <= n; ++row) {
      for (int pos = 1; pos <= (m + 1) / 2; ++pos) {
        one_edges.push_back(Edge{row, s_index(instance, k, row, pos)});
      }
    }
    for (int pos = 1; pos <= (m - n + 2) / 2; ++pos) {
      one_edges.push_back(Edge{1, s1_index(instance, k, pos)});
    }
  }
  return Labeling(instance, one_edges);
}

}  // namespace ebi
