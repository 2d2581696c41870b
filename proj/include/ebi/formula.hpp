#pragma once

#include <map>
#include <vector>

#include "ebi/graph_core.hpp"

namespace ebi {

/// Closed-form parameters of an instance.
/// k and j are the minimum numbers of 0-vertices that any edge-friendly
/// labeling forces in parts A and B respectively; max_index is the largest
/// achievable |v(1) - v(0)|.
struct EbiParams {
  Instance instance;
  int k = 0;          ///< ceil((m-1)/(n+1)); 0 only for K(1,1)
  int j = 0;          ///< ceil((n-1)/(m+1)); 0 iff n = 1, otherwise 1
  int max_index = 0;  ///< 2 when n = 1, otherwise m+n-2k-2
};

EbiParams compute_params(const Instance& instance);

/// The set of achievable index values, optionally with a witness labeling
/// per value. ebi_set never attaches witnesses; the descent checkpoints do.
struct IndexSet {
  std::vector<int> values;  ///< sorted, all even
  std::map<int, Labeling> witnesses;
};

/// {2} when n = 1, else {0, 2, ..., max_index}.
IndexSet ebi_set(const Instance& instance);

}  // namespace ebi
