#pragma once

#include <cstdint>
#include <vector>

#include "ivmc/bigint.hpp"
#include "ivmc/instance.hpp"
#include "ivmc/interval.hpp"

namespace ivmc {

/// Intervals of one common length, sorted by low coordinate with input
/// position as the tie-break. The sorted order is what "leftmost" means.
struct UnitIntervalSet {
  std::int64_t unit_length = 0;
  std::vector<Interval> sorted;
  std::vector<int> original_index;  // sorted[k] came from input position original_index[k]
  std::vector<int> vertex_of;       // optional 1-based vertex per input position

  static UnitIntervalSet from_intervals(const std::vector<Interval>& intervals,
                                        std::vector<int> vertex_of = {});
  std::size_t size() const { return sorted.size(); }
};

struct IntervalMaxCut {
  Big size;
  std::vector<Side> sides;  // input order, first interval pinned to A
  std::uint64_t enumerated = 0;
};

/// Exact maximum cut of the intersection graph of explicit intervals, by
/// enumeration with the first interval pinned to A. Refuses more than 26
/// intervals. Witness is the lexicographically smallest optimal side vector.
IntervalMaxCut brute_force_maxcut_intervals(const std::vector<Interval>& intervals);

struct GreedyOptions {
  // Recompute the candidate set after every placement within a phase
  // instead of freezing it at phase start. Alternative reading; the frozen
  // default is the behavior fixtures pin down.
  bool refresh_within_phase = false;
};

struct GreedyResult {
  std::vector<Side> sides;  // input order
  Big cut;
  int phases = 0;
};

/// Phase-alternating greedy: phase 1 sweeps a maximal independent set into
/// A; each later phase fixes the set of remaining intervals with the most
/// intersections against the opposite class placed so far, then sweeps a
/// maximal independent subset of it into the current class.
GreedyResult greedy_unit_interval(const UnitIntervalSet& u, GreedyOptions opt = {});

/// Unit representation of the two-clique family: 8a intervals of length
/// 100, vertices 1..2a at 0, 2a+1..6a at 50, 6a+1..8a at 101. Its
/// intersection graph is gen_two_clique(a).
UnitIntervalSet gen_two_clique_units(int a);

struct LocalSearchResult {
  Big cut;
  std::int64_t flips = 0;
};

/// Repeatedly applies the best strictly improving single flip (ties to the
/// lowest target id) until none exists. Mutates `sides` in place.
LocalSearchResult local_search_flip(const std::vector<Interval>& intervals,
                                    std::vector<Side>& sides);

/// Grouped-instance variant; flip targets are (group, side) pairs and links,
/// ordered by group id (A-side first), then link id.
LocalSearchResult local_search_flip(const IntervalInstance& inst, GroupPartition& part);

}  // namespace ivmc
