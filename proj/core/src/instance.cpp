#include "ivmc/instance.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace ivmc {

namespace {

constexpr std::int64_t kExplicitLimit = 10'000;
constexpr std::int64_t kMaterializeLimit = 1'000'000;
// Pair counting between partially overlapping groups falls back to a loop
// over the smaller group; instances built by reduce never hit this path.
constexpr std::int64_t kPartialLoopCap = 4'000'000;
// Coordinate magnitude bound. Keeps every O(1) difference and member
// formula inside int64 even for untrusted serialized input.
constexpr std::int64_t kCoordLimit = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

// Number of integers in [lo1, hi1] ∩ [lo2, hi2].
std::int64_t range_overlap(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2,
                           std::int64_t hi2) {
  std::int64_t lo = std::max(lo1, lo2);
  std::int64_t hi = std::min(hi1, hi2);
  return hi >= lo ? hi - lo + 1 : 0;
}

// x*y/2 for x*y known even; keeps the division exact without Big division.
Big half_product(std::int64_t x, std::int64_t y) {
  if (x % 2 == 0) return Big(x / 2) * Big(y);
  return Big(x) * Big(y / 2);
}

enum class Cross { None, Full, Partial };

Cross classify_cross(const IntervalGroup& g1, const IntervalGroup& g2) {
  // Member lows and highs are nondecreasing in the index, so the extreme
  // separations decide whether every pair intersects.
  if (g1.member(g1.count - 1).lo <= g2.member(0).hi &&
      g2.member(g2.count - 1).lo <= g1.member(0).hi)
    return Cross::Full;
  if (!intersects(g1.hull(), g2.hull())) return Cross::None;
  return Cross::Partial;
}

Big partial_cross_cut(const IntervalGroup& g1, std::int64_t a1, const IntervalGroup& g2,
                      std::int64_t a2) {
  const bool swapped = g2.count < g1.count;  // loop over the smaller group
  const IntervalGroup& gs = swapped ? g2 : g1;
  const IntervalGroup& gb = swapped ? g1 : g2;
  const std::int64_t as = swapped ? a2 : a1;
  const std::int64_t ab = swapped ? a1 : a2;
  if (gs.count > kPartialLoopCap)
    throw Error("eval_cut_grouped: partially overlapping group pair exceeds counting cap");
  Big cut = 0;
  for (std::int64_t l = 0; l < gs.count; ++l) {
    auto r = members_intersecting(gb, gs.member(l));
    if (!r) continue;
    if (l < as)
      cut += Big(range_overlap(r->first, r->second, ab, gb.count - 1));
    else
      cut += Big(range_overlap(r->first, r->second, 0, ab - 1));
  }
  return cut;
}

Big cross_cut(const IntervalGroup& g1, std::int64_t a1, const IntervalGroup& g2,
              std::int64_t a2) {
  switch (classify_cross(g1, g2)) {
    case Cross::None:
      return 0;
    case Cross::Full:
      return Big(a1) * Big(g2.count - a2) + Big(g1.count - a1) * Big(a2);
    case Cross::Partial:
      return partial_cross_cut(g1, a1, g2, a2);
  }
  return 0;
}

Big partial_cross_edges(const IntervalGroup& g1, const IntervalGroup& g2) {
  const bool swapped = g2.count < g1.count;
  const IntervalGroup& gs = swapped ? g2 : g1;
  const IntervalGroup& gb = swapped ? g1 : g2;
  if (gs.count > kPartialLoopCap)
    throw Error("count_edges: partially overlapping group pair exceeds counting cap");
  Big edges = 0;
  for (std::int64_t l = 0; l < gs.count; ++l) {
    auto r = members_intersecting(gb, gs.member(l));
    if (r) edges += Big(r->second - r->first + 1);
  }
  return edges;
}

Big cross_edges(const IntervalGroup& g1, const IntervalGroup& g2) {
  switch (classify_cross(g1, g2)) {
    case Cross::None:
      return 0;
    case Cross::Full:
      return Big(g1.count) * Big(g2.count);
    case Cross::Partial:
      return partial_cross_edges(g1, g2);
  }
  return 0;
}

// Largest index distance at which two members of the group still intersect.
std::int64_t internal_reach(const IntervalGroup& g) {
  if (g.stride == 0) return g.count - 1;
  return (g.first_high - g.first_low) / g.stride;
}

Big internal_cut(const IntervalGroup& g, std::int64_t a) {
  if (g.count < 2) return 0;
  if (g.stride == 0) return Big(a) * Big(g.count - a);
  std::int64_t d = internal_reach(g);
  if (d == 0) return 0;
  // Prefix split: opposite pairs are exactly k < a <= l with l - k <= d.
  std::int64_t k_lo = std::max<std::int64_t>(0, a - d);
  if (a - k_lo > kPartialLoopCap)
    throw Error("eval_cut_grouped: overlapping in-group progression exceeds counting cap");
  Big cut = 0;
  for (std::int64_t k = k_lo; k < a; ++k) {
    std::int64_t l_hi = std::min(k + d, g.count - 1);
    if (l_hi >= a) cut += Big(l_hi - a + 1);
  }
  return cut;
}

Big internal_edges(const IntervalGroup& g) {
  if (g.count < 2) return 0;
  if (g.stride == 0) return half_product(g.count, g.count - 1);
  std::int64_t d = std::min(internal_reach(g), g.count - 1);
  if (d == 0) return 0;
  // Sum over gaps 1..d of (count - gap).
  return Big(d) * Big(g.count) - half_product(d, d + 1);
}

Big link_group_cut(const IntervalGroup& g, std::int64_t a, const Interval& span,
                   Side link_side) {
  auto r = members_intersecting(g, span);
  if (!r) return 0;
  if (link_side == Side::A) return Big(range_overlap(r->first, r->second, a, g.count - 1));
  return Big(range_overlap(r->first, r->second, 0, a - 1));
}

void check_partition(const IntervalInstance& inst, const GroupPartition& part) {
  if (part.in_a.size() != inst.groups.size())
    throw Error("partition has " + std::to_string(part.in_a.size()) +
                " group entries, instance has " + std::to_string(inst.groups.size()));
  if (part.link_side.size() != inst.links.size())
    throw Error("partition has " + std::to_string(part.link_side.size()) +
                " link entries, instance has " + std::to_string(inst.links.size()));
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    if (part.in_a[i] < 0 || part.in_a[i] > inst.groups[i].count)
      throw Error("partition: in_a = " + std::to_string(part.in_a[i]) +
                  " out of bounds for group " + std::to_string(inst.groups[i].id) +
                  " of size " + std::to_string(inst.groups[i].count));
  }
}

}  // namespace

const char* role_name(Role r) {
  switch (r) {
    case Role::LeftLong: return "left-long";
    case Role::LeftShort: return "left-short";
    case Role::RightLong: return "right-long";
    case Role::RightShort: return "right-short";
  }
  return "?";
}

Role role_from_name(const std::string& name) {
  if (name == "left-long") return Role::LeftLong;
  if (name == "left-short") return Role::LeftShort;
  if (name == "right-long") return Role::RightLong;
  if (name == "right-short") return Role::RightShort;
  throw Error("unknown group role '" + name + "'");
}

Big IntervalInstance::total_intervals() const {
  Big total = 0;
  for (const auto& g : groups) total += Big(g.count);
  total += Big(static_cast<long long>(links.size()));
  return total;
}

int IntervalInstance::gadget_count() const {
  int n = 0;
  for (const auto& g : groups) n = std::max(n, g.gadget + 1);
  return n;
}

void IntervalInstance::check_basic() const {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    if (g.id != static_cast<int>(i)) throw Error("instance: group ids must equal positions");
    if (g.count < 1) throw Error("instance: group " + std::to_string(g.id) + " has count < 1");
    if (g.stride < 0) throw Error("instance: group " + std::to_string(g.id) + " has negative stride");
    if (g.first_low > g.first_high)
      throw Error("instance: group " + std::to_string(g.id) + " has low > high");
    if (g.gadget < 0) throw Error("instance: negative gadget id");
    // Member formula first_low + k*stride must stay inside int64 for every
    // member; bound the last member's coordinates.
    Big top = Big(g.first_high) + Big(g.count - 1) * Big(g.stride);
    if (g.first_low < -kCoordLimit || top > Big(kCoordLimit))
      throw Error("instance: group " + std::to_string(g.id) + " exceeds the coordinate bound");
  }
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& l = links[i];
    if (l.id != static_cast<int>(i)) throw Error("instance: link ids must equal positions");
    if (l.span.lo > l.span.hi) throw Error("instance: link " + std::to_string(l.id) + " has low > high");
    if (l.span.lo < -kCoordLimit || l.span.hi > kCoordLimit)
      throw Error("instance: link " + std::to_string(l.id) + " exceeds the coordinate bound");
  }
}

GroupPartition GroupPartition::all_on(const IntervalInstance& inst, Side s) {
  GroupPartition part;
  part.in_a.reserve(inst.groups.size());
  for (const auto& g : inst.groups) part.in_a.push_back(s == Side::A ? g.count : 0);
  part.link_side.assign(inst.links.size(), s);
  return part;
}

std::vector<GadgetGroups> index_gadgets(const IntervalInstance& inst) {
  std::vector<GadgetGroups> idx(inst.gadget_count());
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    const auto& g = inst.groups[i];
    int& slot = idx[g.gadget].idx[static_cast<int>(g.role)];
    if (slot != -1)
      throw Error("instance: gadget " + std::to_string(g.gadget) + " has duplicate role " +
                  role_name(g.role));
    slot = static_cast<int>(i);
  }
  return idx;
}

std::optional<std::pair<std::int64_t, std::int64_t>> members_intersecting(
    const IntervalGroup& g, const Interval& x) {
  if (g.stride == 0) {
    if (intersects(g.member(0), x)) return std::make_pair<std::int64_t, std::int64_t>(0, g.count - 1);
    return std::nullopt;
  }
  // member k meets x  iff  first_low + k*stride <= x.hi  and  x.lo <= first_high + k*stride
  std::int64_t k_hi = floor_div(x.hi - g.first_low, g.stride);
  std::int64_t k_lo = ceil_div(x.lo - g.first_high, g.stride);
  k_lo = std::max<std::int64_t>(k_lo, 0);
  k_hi = std::min(k_hi, g.count - 1);
  if (k_lo > k_hi) return std::nullopt;
  return std::make_pair(k_lo, k_hi);
}

Contact classify_contact(const IntervalInstance& inst, const GadgetGroups& gg,
                         const Interval& span) {
  std::array<std::int64_t, 4> touched{0, 0, 0, 0};
  std::array<std::int64_t, 4> total{0, 0, 0, 0};
  for (int r = 0; r < 4; ++r) {
    int gi = gg.idx[r];
    if (gi < 0) continue;
    const auto& g = inst.groups[gi];
    total[r] = g.count;
    if (auto range = members_intersecting(g, span)) touched[r] = range->second - range->first + 1;
  }
  auto all = [&](Role r) { return touched[static_cast<int>(r)] == total[static_cast<int>(r)]; };
  auto none = [&](Role r) { return touched[static_cast<int>(r)] == 0; };
  auto has = [&](Role r) { return total[static_cast<int>(r)] > 0; };
  if (none(Role::LeftLong) && none(Role::LeftShort) && none(Role::RightLong) &&
      none(Role::RightShort))
    return Contact::None;
  if (all(Role::LeftLong) && all(Role::LeftShort) && all(Role::RightLong) &&
      all(Role::RightShort))
    return Contact::Cover;
  if (all(Role::RightLong) && has(Role::RightLong) && none(Role::LeftLong) &&
      none(Role::LeftShort) && none(Role::RightShort))
    return Contact::FirstManner;
  if (all(Role::LeftLong) && has(Role::LeftLong) && none(Role::LeftShort) &&
      none(Role::RightLong) && none(Role::RightShort))
    return Contact::SecondManner;
  if (all(Role::LeftLong) && has(Role::LeftLong) && all(Role::LeftShort) &&
      has(Role::LeftShort) && none(Role::RightLong) && none(Role::RightShort))
    return Contact::ThirdManner;
  return Contact::Irregular;
}

Big count_edges(const IntervalInstance& inst) {
  inst.check_basic();
  Big total = 0;
  for (const auto& g : inst.groups) total += internal_edges(g);
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    for (std::size_t j = i + 1; j < inst.groups.size(); ++j)
      total += cross_edges(inst.groups[i], inst.groups[j]);
  for (const auto& l : inst.links)
    for (const auto& g : inst.groups)
      if (auto r = members_intersecting(g, l.span)) total += Big(r->second - r->first + 1);
  for (std::size_t i = 0; i < inst.links.size(); ++i)
    for (std::size_t j = i + 1; j < inst.links.size(); ++j)
      if (intersects(inst.links[i].span, inst.links[j].span)) total += 1;
  return total;
}

Big eval_cut_grouped(const IntervalInstance& inst, const GroupPartition& part) {
  inst.check_basic();
  check_partition(inst, part);
  Big total = 0;
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    total += internal_cut(inst.groups[i], part.in_a[i]);
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    for (std::size_t j = i + 1; j < inst.groups.size(); ++j)
      total += cross_cut(inst.groups[i], part.in_a[i], inst.groups[j], part.in_a[j]);
  for (std::size_t l = 0; l < inst.links.size(); ++l)
    for (std::size_t i = 0; i < inst.groups.size(); ++i)
      total += link_group_cut(inst.groups[i], part.in_a[i], inst.links[l].span,
                              part.link_side[l]);
  for (std::size_t i = 0; i < inst.links.size(); ++i)
    for (std::size_t j = i + 1; j < inst.links.size(); ++j)
      if (part.link_side[i] != part.link_side[j] &&
          intersects(inst.links[i].span, inst.links[j].span))
        total += 1;
  return total;
}

Big CutBreakdown::total() const {
  return gadget_internal + covering + first_manner + second_manner + third_manner + link_link +
         other;
}

CutBreakdown eval_cut_breakdown(const IntervalInstance& inst, const GroupPartition& part) {
  inst.check_basic();
  check_partition(inst, part);
  CutBreakdown out;
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    out.gadget_internal += internal_cut(inst.groups[i], part.in_a[i]);
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    for (std::size_t j = i + 1; j < inst.groups.size(); ++j) {
      Big c = cross_cut(inst.groups[i], part.in_a[i], inst.groups[j], part.in_a[j]);
      if (inst.groups[i].gadget == inst.groups[j].gadget)
        out.gadget_internal += c;
      else
        out.other += c;
    }
  auto gadgets = index_gadgets(inst);
  for (std::size_t l = 0; l < inst.links.size(); ++l) {
    const auto& link = inst.links[l];
    for (std::size_t h = 0; h < gadgets.size(); ++h) {
      Big c = 0;
      for (int r = 0; r < 4; ++r) {
        int gi = gadgets[h].idx[r];
        if (gi < 0) continue;
        c += link_group_cut(inst.groups[gi], part.in_a[gi], link.span, part.link_side[l]);
      }
      switch (classify_contact(inst, gadgets[h], link.span)) {
        case Contact::None: break;
        case Contact::Cover: out.covering += c; break;
        case Contact::FirstManner: out.first_manner += c; break;
        case Contact::SecondManner: out.second_manner += c; break;
        case Contact::ThirdManner: out.third_manner += c; break;
        case Contact::Irregular: out.other += c; break;
      }
    }
  }
  for (std::size_t i = 0; i < inst.links.size(); ++i)
    for (std::size_t j = i + 1; j < inst.links.size(); ++j)
      if (part.link_side[i] != part.link_side[j] &&
          intersects(inst.links[i].span, inst.links[j].span))
        out.link_link += 1;
  return out;
}

Big eval_cut_explicit(const std::vector<Interval>& intervals, const std::vector<Side>& sides) {
  if (intervals.size() != sides.size())
    throw Error("eval_cut_explicit: interval/side length mismatch");
  if (static_cast<std::int64_t>(intervals.size()) > kExplicitLimit)
    throw Error("eval_cut_explicit: " + std::to_string(intervals.size()) +
                " intervals exceed the pairwise bound " + std::to_string(kExplicitLimit));
  Big cut = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j)
      if (sides[i] != sides[j] && intersects(intervals[i], intervals[j])) cut += 1;
  return cut;
}

std::vector<MaterializedInterval> materialize(const IntervalInstance& inst) {
  inst.check_basic();
  Big total = inst.total_intervals();
  if (total > Big(kMaterializeLimit))
    throw Error("materialize: instance has " + total.str() + " intervals, bound is " +
                std::to_string(kMaterializeLimit));
  std::vector<MaterializedInterval> out;
  out.reserve(static_cast<std::size_t>(total.as_i64()));
  for (const auto& g : inst.groups)
    for (std::int64_t k = 0; k < g.count; ++k)
      out.push_back(MaterializedInterval{g.member(k), false, g.id, k});
  for (const auto& l : inst.links) out.push_back(MaterializedInterval{l.span, true, l.id, 0});
  return out;
}

std::vector<Side> sides_for_materialization(const IntervalInstance& inst,
                                            const GroupPartition& part) {
  check_partition(inst, part);
  std::vector<Side> sides;
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    for (std::int64_t k = 0; k < inst.groups[i].count; ++k)
      sides.push_back(k < part.in_a[i] ? Side::A : Side::B);
  for (std::size_t l = 0; l < inst.links.size(); ++l) sides.push_back(part.link_side[l]);
  return sides;
}

namespace {

// Neighbor tally of one explicit interval (a group member or a link span),
// split by side under the prefix convention. `skip_group`/`skip_member` and
// `skip_link` exclude the target itself.
void tally_neighbors(const IntervalInstance& inst, const GroupPartition& part,
                     const Interval& iv, int skip_group, std::int64_t skip_member,
                     int skip_link, Big& on_a, Big& on_b) {
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    const auto& g = inst.groups[i];
    auto r = members_intersecting(g, iv);
    if (!r) continue;
    std::int64_t a_cnt = range_overlap(r->first, r->second, 0, part.in_a[i] - 1);
    std::int64_t b_cnt = (r->second - r->first + 1) - a_cnt;
    if (static_cast<int>(i) == skip_group && skip_member >= r->first &&
        skip_member <= r->second) {
      if (skip_member < part.in_a[i])
        --a_cnt;
      else
        --b_cnt;
    }
    on_a += Big(a_cnt);
    on_b += Big(b_cnt);
  }
  for (std::size_t l = 0; l < inst.links.size(); ++l) {
    if (static_cast<int>(l) == skip_link) continue;
    if (!intersects(inst.links[l].span, iv)) continue;
    if (part.link_side[l] == Side::A)
      on_a += 1;
    else
      on_b += 1;
  }
}

}  // namespace

Big flip_delta(const IntervalInstance& inst, const GroupPartition& part, const FlipTarget& t) {
  inst.check_basic();
  check_partition(inst, part);
  Big on_a = 0, on_b = 0;
  Side from;
  if (t.kind == FlipTarget::Kind::Link) {
    if (t.id < 0 || t.id >= static_cast<int>(inst.links.size()))
      throw Error("flip_delta: link id out of range");
    from = part.link_side[t.id];
    tally_neighbors(inst, part, inst.links[t.id].span, -1, -1, t.id, on_a, on_b);
  } else {
    if (t.id < 0 || t.id >= static_cast<int>(inst.groups.size()))
      throw Error("flip_delta: group id out of range");
    const auto& g = inst.groups[t.id];
    std::int64_t a = part.in_a[t.id];
    from = t.from;
    if (from == Side::A && a == 0)
      throw Error("flip_delta: group " + std::to_string(t.id) + " has no member in A");
    if (from == Side::B && a == g.count)
      throw Error("flip_delta: group " + std::to_string(t.id) + " has no member in B");
    std::int64_t member = from == Side::A ? a - 1 : a;
    tally_neighbors(inst, part, g.member(member), t.id, member, -1, on_a, on_b);
  }
  // Gains every same-side neighbor, loses every opposite-side neighbor.
  return from == Side::A ? on_a - on_b : on_b - on_a;
}

void apply_flip(const IntervalInstance& inst, GroupPartition& part, const FlipTarget& t) {
  if (t.kind == FlipTarget::Kind::Link) {
    if (t.id < 0 || t.id >= static_cast<int>(inst.links.size()))
      throw Error("apply_flip: link id out of range");
    part.link_side[t.id] = opposite(part.link_side[t.id]);
    return;
  }
  if (t.id < 0 || t.id >= static_cast<int>(inst.groups.size()))
    throw Error("apply_flip: group id out of range");
  std::int64_t& a = part.in_a[t.id];
  if (t.from == Side::A) {
    if (a == 0) throw Error("apply_flip: group has no member in A");
    --a;
  } else {
    if (a == inst.groups[t.id].count) throw Error("apply_flip: group has no member in B");
    ++a;
  }
}

}  // namespace ivmc
