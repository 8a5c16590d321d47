#include "ivmc/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ivmc/error.hpp"

namespace ivmc {

UnitIntervalSet UnitIntervalSet::from_intervals(const std::vector<Interval>& intervals,
                                                std::vector<int> vertex_of) {
  UnitIntervalSet u;
  if (intervals.empty()) return u;
  u.unit_length = intervals.front().width();
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw Error("unit intervals: low > high");
    if (iv.width() != u.unit_length)
      throw Error("unit intervals: lengths differ (" + std::to_string(iv.width()) + " vs " +
                  std::to_string(u.unit_length) + ")");
  }
  if (!vertex_of.empty() && vertex_of.size() != intervals.size())
    throw Error("unit intervals: vertex correspondence length mismatch");
  u.original_index.resize(intervals.size());
  std::iota(u.original_index.begin(), u.original_index.end(), 0);
  std::stable_sort(u.original_index.begin(), u.original_index.end(),
                   [&](int a, int b) { return intervals[a].lo < intervals[b].lo; });
  u.sorted.reserve(intervals.size());
  for (int idx : u.original_index) u.sorted.push_back(intervals[idx]);
  u.vertex_of = std::move(vertex_of);
  return u;
}

IntervalMaxCut brute_force_maxcut_intervals(const std::vector<Interval>& intervals) {
  const int n = static_cast<int>(intervals.size());
  if (n > 26)
    throw Error("brute_force_maxcut_intervals: " + std::to_string(n) +
                " intervals exceed the enumeration bound 26");
  IntervalMaxCut out;
  if (n == 0) {
    out.size = 0;
    out.enumerated = 1;
    return out;
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(intervals[i], intervals[j])) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  const std::uint64_t total = 1ull << (n - 1);
  long long best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    // bit i set = interval i on side B; interval 0 pinned to A.
    std::uint32_t bmask = static_cast<std::uint32_t>(m) << 1;
    long long c = 0;
    for (int i = 0; i < n; ++i)
      if (!((bmask >> i) & 1u)) c += std::popcount(adj[i] & bmask);
    if (c > best) {
      best = c;
      best_mask = bmask;
    }
    // Ascending masks visit side vectors so that any later equal cut is
    // lexicographically larger only when the earlier bits agree; resolve
    // ties explicitly.
    else if (c == best) {
      for (int i = 0; i < n; ++i) {
        bool cur = (best_mask >> i) & 1u;
        bool cand = (bmask >> i) & 1u;
        if (cur != cand) {
          if (!cand) best_mask = bmask;
          break;
        }
      }
    }
  }
  out.size = best;
  out.enumerated = total;
  out.sides.reserve(n);
  for (int i = 0; i < n; ++i)
    out.sides.push_back(((best_mask >> i) & 1u) ? Side::B : Side::A);
  return out;
}

namespace {

// Unit intervals sorted by low coordinate: the neighbors of index k form a
// contiguous index range.
struct NeighborRanges {
  std::vector<int> first;
  std::vector<int> last;  // inclusive
};

NeighborRanges neighbor_ranges(const std::vector<Interval>& sorted) {
  const int n = static_cast<int>(sorted.size());
  NeighborRanges r;
  r.first.resize(n);
  r.last.resize(n);
  for (int i = 0; i < n; ++i) {
    int f = i;
    while (f > 0 && sorted[f - 1].hi >= sorted[i].lo) --f;
    int l = i;
    while (l + 1 < n && sorted[l + 1].lo <= sorted[i].hi) ++l;
    r.first[i] = f;
    r.last[i] = l;
  }
  return r;
}

}  // namespace

GreedyResult greedy_unit_interval(const UnitIntervalSet& u, GreedyOptions opt) {
  const int n = static_cast<int>(u.size());
  GreedyResult out;
  out.sides.assign(n, Side::A);
  out.cut = 0;
  if (n == 0) return out;
  NeighborRanges nbr = neighbor_ranges(u.sorted);
  std::vector<std::int8_t> placed(n, -1);        // -1 unplaced, else 0=A 1=B
  std::vector<std::int64_t> cnt[2];              // intersections with placed A / B
  cnt[0].assign(n, 0);
  cnt[1].assign(n, 0);
  int remaining = n;
  int phase = 0;
  auto place = [&](int k, Side s) {
    placed[k] = s == Side::A ? 0 : 1;
    --remaining;
    for (int j = nbr.first[k]; j <= nbr.last[k]; ++j)
      if (j != k && placed[j] < 0) ++cnt[static_cast<int>(s)][j];
  };
  while (remaining > 0) {
    ++phase;
    const Side current = (phase % 2 == 1) ? Side::A : Side::B;
    const int opp = current == Side::A ? 1 : 0;  // class whose counts qualify candidates
    std::int64_t phase_hi = 0;
    bool placed_any = false;
    if (!opt.refresh_within_phase || phase == 1) {
      // Candidate set frozen at phase start.
      std::vector<char> candidate(n, 0);
      if (phase == 1) {
        std::fill(candidate.begin(), candidate.end(), 1);
      } else {
        std::int64_t best = -1;
        for (int k = 0; k < n; ++k)
          if (placed[k] < 0) best = std::max(best, cnt[opp][k]);
        for (int k = 0; k < n; ++k)
          if (placed[k] < 0 && cnt[opp][k] == best) candidate[k] = 1;
      }
      for (int k = 0; k < n; ++k) {
        if (placed[k] >= 0 || !candidate[k]) continue;
        if (placed_any && u.sorted[k].lo <= phase_hi) continue;
        place(k, current);
        placed_any = true;
        phase_hi = u.sorted[k].hi;
      }
    } else {
      while (true) {
        std::int64_t best = -1;
        for (int k = 0; k < n; ++k)
          if (placed[k] < 0) best = std::max(best, cnt[opp][k]);
        int pick = -1;
        for (int k = 0; k < n; ++k) {
          if (placed[k] < 0 && cnt[opp][k] == best &&
              (!placed_any || u.sorted[k].lo > phase_hi)) {
            pick = k;
            break;
          }
        }
        if (pick < 0) break;
        place(pick, current);
        placed_any = true;
        phase_hi = u.sorted[pick].hi;
      }
    }
    if (!placed_any) {
      // Nothing in the candidate set is independent of this phase; the next
      // phase recomputes candidates against the grown opposite class.
      if (phase > n + 1) throw Error("greedy: phase made no progress");
    }
  }
  out.phases = phase;
  for (int k = 0; k < n; ++k) out.sides[u.original_index[k]] = placed[k] == 0 ? Side::A : Side::B;
  Big cut = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= nbr.last[i]; ++j)
      if (placed[i] != placed[j]) cut += 1;
  out.cut = cut;
  return out;
}

UnitIntervalSet gen_two_clique_units(int a) {
  if (a < 1) throw Error("two-clique units: parameter a must be >= 1");
  std::vector<Interval> ivs;
  std::vector<int> vertex_of;
  ivs.reserve(8 * a);
  for (int v = 1; v <= 8 * a; ++v) {
    std::int64_t lo = v <= 2 * a ? 0 : (v <= 6 * a ? 50 : 101);
    ivs.push_back(Interval{lo, lo + 100});
    vertex_of.push_back(v);
  }
  return UnitIntervalSet::from_intervals(ivs, std::move(vertex_of));
}

LocalSearchResult local_search_flip(const std::vector<Interval>& intervals,
                                    std::vector<Side>& sides) {
  const int n = static_cast<int>(intervals.size());
  if (sides.size() != intervals.size())
    throw Error("local_search_flip: interval/side length mismatch");
  if (n > 10'000) throw Error("local_search_flip: more than 10^4 explicit intervals");
  // cnt[s][i]: neighbors of i currently on side s.
  std::vector<std::int64_t> cnt[2];
  cnt[0].assign(n, 0);
  cnt[1].assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(intervals[i], intervals[j])) {
        ++cnt[static_cast<int>(sides[j])][i];
        ++cnt[static_cast<int>(sides[i])][j];
      }
  LocalSearchResult res;
  while (true) {
    std::int64_t best_delta = 0;
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
      int s = static_cast<int>(sides[i]);
      std::int64_t delta = cnt[s][i] - cnt[1 - s][i];
      if (delta > best_delta) {
        best_delta = delta;
        best_i = i;
      }
    }
    if (best_i < 0) break;
    int old_side = static_cast<int>(sides[best_i]);
    sides[best_i] = opposite(sides[best_i]);
    for (int j = 0; j < n; ++j) {
      if (j == best_i || !intersects(intervals[best_i], intervals[j])) continue;
      --cnt[old_side][j];
      ++cnt[1 - old_side][j];
    }
    ++res.flips;
  }
  res.cut = eval_cut_explicit(intervals, sides);
  return res;
}

LocalSearchResult local_search_flip(const IntervalInstance& inst, GroupPartition& part) {
  LocalSearchResult res;
  const int g_count = static_cast<int>(inst.groups.size());
  while (true) {
    Big best_delta = 0;
    FlipTarget best{};
    bool have = false;
    auto consider = [&](const FlipTarget& t) {
      Big d = flip_delta(inst, part, t);
      if (d > best_delta) {
        best_delta = d;
        best = t;
        have = true;
      }
    };
    for (int i = 0; i < g_count; ++i) {
      if (part.in_a[i] > 0) consider(FlipTarget{FlipTarget::Kind::GroupMember, i, Side::A});
      if (part.in_a[i] < inst.groups[i].count)
        consider(FlipTarget{FlipTarget::Kind::GroupMember, i, Side::B});
    }
    for (std::size_t l = 0; l < inst.links.size(); ++l)
      consider(FlipTarget{FlipTarget::Kind::Link, static_cast<int>(l), Side::A});
    if (!have) break;
    apply_flip(inst, part, best);
    ++res.flips;
  }
  res.cut = eval_cut_grouped(inst, part);
  return res;
}

}  // namespace ivmc
