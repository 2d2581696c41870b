#include "ebi/descent.hpp"

#include <optional>

namespace ebi {

char part_letter(Part part) { return part == Part::A ? 'A' : 'B'; }

namespace {

struct PairPick {
  int x = 0;  // 0 when the part has no 0-vertex
  int y = 0;  // 0 when the part has no 1-vertex
  int deg0_x = 0;
  int deg1_y = 0;
};

// Extremal pair of one part: the 0-vertex of maximum deg0 and the 1-vertex of
// minimum deg1, smallest subscript on ties. If any pair of the part satisfies
// deg0(x) > deg1(y), this one does.
PairPick pick_pair(const std::vector<VertexSummary>& part) {
  PairPick p;
  for (int i = 1; i <= static_cast<int>(part.size()); ++i) {
    const VertexSummary& v = part[i - 1];
    if (v.label == 0) {
      if (p.x == 0 || v.deg0 > p.deg0_x) {
        p.x = i;
        p.deg0_x = v.deg0;
      }
    } else {
      if (p.y == 0 || v.deg1 < p.deg1_y) {
        p.y = i;
        p.deg1_y = v.deg1;
      }
    }
  }
  return p;
}

// Smallest-subscript common neighbor z with xz a 0-edge and yz a 1-edge.
// Exists whenever deg0(x) + deg1(y) exceeds the opposite part size.
int pick_z(const Labeling& labeling, Part part, int x, int y) {
  const Instance& inst = labeling.instance();
  const int opposite = part == Part::A ? inst.n : inst.m;
  for (int z = 1; z <= opposite; ++z) {
    const bool xz = part == Part::A ? labeling.bit(z, x) : labeling.bit(x, z);
    const bool yz = part == Part::A ? labeling.bit(z, y) : labeling.bit(y, z);
    if (!xz && yz) return z;
  }
  return 0;
}

SwapChoice make_choice(const Labeling& labeling, Part part, int x, int y) {
  const int z = pick_z(labeling, part, x, y);
  if (z == 0) {
    throw AssertionBreach("descent: no common neighbor for x=" + std::to_string(x) +
                          " y=" + std::to_string(y) + " in part " +
                          std::string(1, part_letter(part)));
  }
  SwapChoice choice;
  choice.part = part;
  choice.x = x;
  choice.y = y;
  choice.z = z;
  choice.zero_edge = part == Part::A ? Edge{z, x} : Edge{x, z};
  choice.one_edge = part == Part::A ? Edge{z, y} : Edge{y, z};
  return choice;
}

std::string part_diag(Part part, const PairPick& p) {
  return std::string(1, part_letter(part)) + ": x=" + std::to_string(p.x) +
         " deg0(x)=" + std::to_string(p.deg0_x) + " y=" + std::to_string(p.y) +
         " deg1(y)=" + std::to_string(p.deg1_y);
}

void require_descendable(const Labeling& labeling, const Counts& c, const char* who) {
  if (labeling.instance().n < 3) {
    throw InstanceError(std::string(who) + ": requires n >= 3, EBI(K(m,1)) = {2}");
  }
  if (c.v1 <= c.v0) {
    throw Error(std::string(who) + ": requires v(1) > v(0), got v1=" +
                std::to_string(c.v1) + " v0=" + std::to_string(c.v0));
  }
}

}  // namespace

SwapChoice find_swap(const Labeling& labeling) {
  require_descendable(labeling, counts(labeling), "find_swap");
  const VertexSummaries s = vertex_summaries(labeling);
  bool any_mixed = false;
  std::string diag;
  for (Part part : {Part::A, Part::B}) {
    const auto& vs = part == Part::A ? s.part_a : s.part_b;
    const PairPick p = pick_pair(vs);
    if (p.x == 0 || p.y == 0) continue;
    any_mixed = true;
    if (p.deg0_x > p.deg1_y) return make_choice(labeling, part, p.x, p.y);
    if (!diag.empty()) diag += "; ";
    diag += part_diag(part, p);
  }
  if (!any_mixed) {
    throw NoMixedPart("find_swap: no part contains both a 0-vertex and a 1-vertex");
  }
  throw AssertionBreach("find_swap: no pair with deg0(x) > deg1(y) in either part (" +
                        diag + ")");
}

std::pair<Labeling, std::vector<SwapChoice>> descend_once(const Labeling& labeling) {
  const Counts start = counts(labeling);
  require_descendable(labeling, start, "descend_once");
  const int target = start.index - 2;

  Labeling current = labeling;
  std::vector<SwapChoice> steps;
  // The pair persists across swaps of the phase; z is re-selected each time.
  std::optional<std::pair<Part, std::pair<int, int>>> pair;
  while (true) {
    const VertexSummaries s = vertex_summaries(current);
    if (pair) {
      const auto& vs = pair->first == Part::A ? s.part_a : s.part_b;
      const int x = pair->second.first;
      const int y = pair->second.second;
      if (vs[x - 1].label != 0 || vs[y - 1].label != 1) pair.reset();
    }
    SwapChoice choice;
    if (pair) {
      const auto& vs = pair->first == Part::A ? s.part_a : s.part_b;
      const int x = pair->second.first;
      const int y = pair->second.second;
      if (vs[x - 1].deg0 <= vs[y - 1].deg1) {
        throw AssertionBreach(
            "descend_once: deg0(x) > deg1(y) failed mid-phase (" +
            part_diag(pair->first, PairPick{x, y, vs[x - 1].deg0, vs[y - 1].deg1}) + ")");
      }
      choice = make_choice(current, pair->first, x, y);
    } else {
      choice = find_swap(current);
      pair = {choice.part, {choice.x, choice.y}};
    }
    current = swap_pair(current, choice.zero_edge, choice.one_edge);
    steps.push_back(choice);
    const Counts c = counts(current);
    if (c.index == target) break;
    if (c.index != start.index) {
      throw AssertionBreach("descend_once: index moved from " +
                            std::to_string(start.index) + " to " +
                            std::to_string(c.index) + " in one swap");
    }
  }
  return {std::move(current), std::move(steps)};
}

DescentTrace descend_to(const Labeling& labeling, int target) {
  if (labeling.instance().n < 3) {
    throw InstanceError("descend_to: requires n >= 3, EBI(K(m,1)) = {2}");
  }
  const Counts start = counts(labeling);
  if (target < 0 || target % 2 != 0 || target > start.index) {
    throw TargetUnreachable("descend_to: target " + std::to_string(target) +
                            " not an even value in [0, " +
                            std::to_string(start.index) + "]");
  }
  DescentTrace trace{labeling, {}, {}};
  trace.checkpoints.emplace(start.index, labeling);
  Labeling current = labeling;
  int index = start.index;
  while (index > target) {
    auto [next, steps] = descend_once(current);
    trace.steps.insert(trace.steps.end(), steps.begin(), steps.end());
    index -= 2;
    const Counts c = counts(next);
    if (c.index != index) {
      throw AssertionBreach("descend_to: expected index " + std::to_string(index) +
                            " after phase, got " + std::to_string(c.index));
    }
    trace.checkpoints.emplace(index, next);
    current = std::move(next);
  }
  return trace;
}

std::string to_text(const DescentTrace& trace) {
  std::string out;
  for (const auto& [index, labeling] : trace.checkpoints) {
    out += "=== index " + std::to_string(index) + " ===\n";
    out += to_text(labeling);
  }
  return out;
}

}  // namespace ebi
