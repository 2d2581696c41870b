#include <set>

#include "doctest.h"
#include "ebi/constructor.hpp"
#include "ebi/descent.hpp"
#include "ebi/formula.hpp"

using namespace ebi;

namespace {

// Replays a trace's steps from its start labeling, checking the swap laws at
// every step: e1 preserved, z's vertex label stable, index never increasing
// and moving only in jumps of 2.
void replay_and_check(const DescentTrace& trace) {
  Labeling current = trace.start;
  int index = counts(current).index;
  for (const SwapChoice& step : trace.steps) {
    const auto before = vertex_summaries(current);
    const int z_label_before = step.part == Part::A ? before.part_b[step.z - 1].label
                                                    : before.part_a[step.z - 1].label;
    const auto& vs = step.part == Part::A ? before.part_a : before.part_b;
    CHECK(vs[step.x - 1].label == 0);
    CHECK(vs[step.y - 1].label == 1);
    CHECK(vs[step.x - 1].deg0 > vs[step.y - 1].deg1);

    const Labeling next = swap_pair(current, step.zero_edge, step.one_edge);
    const auto after = vertex_summaries(next);
    const int z_label_after = step.part == Part::A ? after.part_b[step.z - 1].label
                                                   : after.part_a[step.z - 1].label;
    CHECK(z_label_before == z_label_after);
    const Counts c = counts(next);
    CHECK(c.e1 == counts(current).e1);
    CHECK((c.index == index || c.index == index - 2));
    index = c.index;
    current = next;
  }
}

}  // namespace

TEST_CASE("find_swap picks the documented pair on construct_max(5,3)") {
  const Labeling l = construct_max(Instance(5, 3));
  const SwapChoice choice = find_swap(l);
  CHECK(choice.part == Part::A);
  CHECK(choice.x == 1);  // v_1, the all-zero column
  CHECK(choice.y == 2);  // v_{k+1}
  CHECK(choice.z == 2);  // u_2 is the smallest row with bit(z,1)=0, bit(z,2)=1
  CHECK(choice.zero_edge == Edge{2, 1});
  CHECK(choice.one_edge == Edge{2, 2});
  CHECK(!l.bit(choice.zero_edge.row, choice.zero_edge.col));
  CHECK(l.bit(choice.one_edge.row, choice.one_edge.col));
}

TEST_CASE("find_swap preconditions") {
  CHECK_THROWS_AS(find_swap(construct_max(Instance(7, 1))), InstanceError);
  // Balanced labeling: v(1) = v(0) fails the v(1) > v(0) requirement.
  const DescentTrace t = descend_to(construct_max(Instance(3, 3)), 0);
  CHECK_THROWS_AS(find_swap(t.checkpoints.at(0)), Error);
}

TEST_CASE("descend_once lowers the index by exactly 2") {
  const auto [l53, steps53] = descend_once(construct_max(Instance(5, 3)));
  CHECK(counts(l53).index == 2);
  CHECK(steps53.size() == 1);

  const auto [l33, steps33] = descend_once(construct_max(Instance(3, 3)));
  CHECK(counts(l33).index == 0);
  REQUIRE(steps33.size() == 1);
  // v_2 has deg1 = 3 = deg0(v_1), so the min-deg1 rule must pick v_3.
  CHECK(steps33[0].x == 1);
  CHECK(steps33[0].y == 3);
}

TEST_CASE("descend_to reaches every target on favorable instances") {
  SUBCASE("identity target") {
    const Labeling l = construct_max(Instance(5, 3));
    const DescentTrace t = descend_to(l, 4);
    CHECK(t.steps.empty());
    CHECK(t.checkpoints.size() == 1);
    CHECK(t.checkpoints.at(4) == l);
  }
  SUBCASE("(7,3) down to 0") {
    const DescentTrace t = descend_to(construct_max(Instance(7, 3)), 0);
    std::set<int> keys;
    for (const auto& [index, labeling] : t.checkpoints) {
      keys.insert(index);
      CHECK(counts(labeling).index == index);
    }
    CHECK(keys == std::set<int>{0, 2, 4});
    replay_and_check(t);
  }
  SUBCASE("(5,5) down to 0, one phase swaps in part B") {
    const DescentTrace t = descend_to(construct_max(Instance(5, 5)), 0);
    std::set<int> keys;
    for (const auto& [index, labeling] : t.checkpoints) keys.insert(index);
    CHECK(keys == std::set<int>{0, 2, 4, 6});
    bool used_part_b = false;
    for (const SwapChoice& step : t.steps) used_part_b |= step.part == Part::B;
    CHECK(used_part_b);
    replay_and_check(t);
  }
  SUBCASE("(11,3) down to 0") {
    const DescentTrace t = descend_to(construct_max(Instance(11, 3)), 0);
    CHECK(t.checkpoints.size() == 4);
    CHECK(counts(t.checkpoints.at(0)).index == 0);
    replay_and_check(t);
  }
}

TEST_CASE("checkpoint set composes with the closed form where descent completes") {
  for (auto [m, n] : {std::pair{3, 3}, {7, 3}, {11, 3}, {5, 5}, {9, 5}}) {
    const Instance inst(m, n);
    const DescentTrace t = descend_to(construct_max(inst), 0);
    std::set<int> keys;
    for (const auto& [index, labeling] : t.checkpoints) keys.insert(index);
    std::set<int> expected;
    for (int v : ebi_set(inst).values) expected.insert(v);
    CHECK(keys == expected);
  }
}

TEST_CASE("descent stalls at index 2 when n+1 divides m-1") {
  // From the canonical max labeling every index drop spends one unit of
  // sum(deg0 - threshold) over the 0-vertices, and that stock is one unit
  // short exactly when (n+1) | (m-1); the swap procedure then cannot reach 0.
  for (auto [m, n] : {std::pair{5, 3}, {9, 3}, {7, 5}, {9, 7}}) {
    const Instance inst(m, n);
    CHECK((m - 1) % (n + 1) == 0);
    const int max_index = compute_params(inst).max_index;
    const DescentTrace partial = descend_to(construct_max(inst), 2);
    CHECK(counts(partial.checkpoints.at(2)).index == 2);
    CHECK(partial.checkpoints.size() == static_cast<std::size_t>(max_index / 2));
    replay_and_check(partial);
    CHECK_THROWS_AS(descend_to(construct_max(inst), 0), AssertionBreach);
  }
}

TEST_CASE("descent checkpoints furnish a valid witness set") {
  const Instance inst(7, 3);
  IndexSet set = ebi_set(inst);
  const DescentTrace t = descend_to(construct_max(inst), 0);
  for (const auto& [index, labeling] : t.checkpoints) set.witnesses.emplace(index, labeling);
  CHECK(set.witnesses.size() == set.values.size());
  for (const auto& [value, witness] : set.witnesses) {
    CHECK(counts(witness).index == value);
    CHECK(counts(witness).e1 - counts(witness).e0 == 1);
  }
}

TEST_CASE("descent feasibility is decided by (n+1) dividing (m-1)") {
  for (int m = 3; m <= 49; m += 2) {
    for (int n = 3; n <= m; n += 2) {
      const Instance inst(m, n);
      const bool divides = (m - 1) % (n + 1) == 0;
      if (divides) {
        // Slack runs out one drop early: index 2 is reached, 0 is not.
        const DescentTrace partial = descend_to(construct_max(inst), 2);
        CHECK(counts(partial.checkpoints.at(2)).index == 2);
        CHECK_THROWS_AS(descend_to(construct_max(inst), 0), AssertionBreach);
      } else {
        const DescentTrace t = descend_to(construct_max(inst), 0);
        CHECK(counts(t.checkpoints.at(0)).index == 0);
      }
    }
  }
}

TEST_CASE("descend_to rejects bad targets and n = 1") {
  const Labeling l = construct_max(Instance(5, 3));
  CHECK_THROWS_AS(descend_to(l, 3), TargetUnreachable);
  CHECK_THROWS_AS(descend_to(l, 6), TargetUnreachable);
  CHECK_THROWS_AS(descend_to(l, -2), TargetUnreachable);
  CHECK_THROWS_AS(descend_to(construct_max(Instance(5, 1)), 0), InstanceError);
}

TEST_CASE("phase length is bounded by deg1 of the chosen 1-vertex") {
  for (auto [m, n] : {std::pair{7, 3}, {9, 5}, {11, 7}}) {
    Labeling current = construct_max(Instance(m, n));
    while (counts(current).index > 2) {
      const auto s = vertex_summaries(current);
      auto [next, steps] = descend_once(current);
      REQUIRE(!steps.empty());
      const auto& vs = steps.front().part == Part::A ? s.part_a : s.part_b;
      CHECK(static_cast<int>(steps.size()) <= vs[steps.front().y - 1].deg1);
      // Every swap of the phase keeps working on the same pair.
      for (const SwapChoice& step : steps) {
        CHECK(step.x == steps.front().x);
        CHECK(step.y == steps.front().y);
        CHECK(step.part == steps.front().part);
      }
      current = next;
    }
  }
}

TEST_CASE("trace text lists blocks from the start index down") {
  const DescentTrace t = descend_to(construct_max(Instance(5, 3)), 2);
  const std::string text = to_text(t);
  CHECK(text == "=== index 4 ===\n5 3\n00011\n01110\n01101\n"
                "=== index 2 ===\n5 3\n00011\n10110\n01101\n");
  // Every block re-parses through the labeling format.
  std::size_t pos = 0;
  int blocks = 0;
  while (pos < text.size()) {
    const std::size_t header_end = text.find('\n', pos);
    REQUIRE(header_end != std::string::npos);
    CHECK(text.compare(pos, 10, "=== index ") == 0);
    std::size_t body = header_end + 1;
    std::size_t next = text.find("=== index ", body);
    if (next == std::string::npos) next = text.size();
    CHECK_NOTHROW(labeling_from_text(text.substr(body, next - body)));
    ++blocks;
    pos = next;
  }
  CHECK(blocks == 2);
}
