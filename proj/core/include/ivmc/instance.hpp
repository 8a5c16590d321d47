#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivmc/bigint.hpp"
#include "ivmc/error.hpp"
#include "ivmc/interval.hpp"

namespace ivmc {

enum class Role : std::uint8_t { LeftLong = 0, LeftShort = 1, RightLong = 2, RightShort = 3 };
enum class Manner : std::uint8_t { Second, Third };
enum class Side : std::uint8_t { A = 0, B = 1 };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
const char* role_name(Role r);
Role role_from_name(const std::string& name);

/// Construction parameters of an instance. qe/pe are the E-gadget analogues
/// of q/p. Field names match the serialized schema.
struct Params {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::int64_t qe = 0;
  std::int64_t pe = 0;

  bool operator==(const Params&) const = default;
};

/// A counted family of intervals owned by one gadget.
///
/// Member k (0-based, k < count) spans
///   [first_low + k*stride, first_high + k*stride].
/// Long roles use stride 0 (count coordinate-identical intervals); short
/// roles use a positive stride larger than the member width, so members are
/// pairwise disjoint.
struct IntervalGroup {
  int id = 0;
  int gadget = 0;
  Role role = Role::LeftLong;
  std::int64_t count = 0;
  std::int64_t first_low = 0;
  std::int64_t first_high = 0;
  std::int64_t stride = 0;

  Interval member(std::int64_t k) const {
    return Interval{first_low + k * stride, first_high + k * stride};
  }
  Interval hull() const { return Interval{first_low, first_high + (count - 1) * stride}; }
};

/// One of the 6n intervals tying a V-gadget to an E-gadget. Endpoints are
/// explicit; source/target/manner fields are declarations that
/// validate_instance re-checks against the coordinates.
struct LinkInterval {
  int id = 0;
  Interval span;
  int source_vertex = 0;  // 1-based vertex id
  int target_edge = 0;    // 1-based edge id
  Manner manner = Manner::Second;
};

/// Group-compressed interval instance. Gadgets are numbered 0..n-1 for
/// V-gadgets and n..n+m-1 for E-gadgets; groups are stored per gadget in
/// role order left-long, left-short, right-long, right-short.
struct IntervalInstance {
  Params params;
  std::vector<IntervalGroup> groups;
  std::vector<LinkInterval> links;

  Big total_intervals() const;
  int gadget_count() const;

  /// Cheap structural sanity (ids in order, counts positive, stride >= 0,
  /// low <= high). Deep semantic checks live in validate_instance.
  void check_basic() const;
};

/// Assignment of every interval to side A or B.
///
/// Per group only the count in A is stored; the members in A are the first
/// in_a members in materialization order. For instances whose short groups
/// have uniform external neighborhoods (checked by validate_instance) every
/// member of a group is interchangeable, so the prefix convention does not
/// restrict expressible cut values.
struct GroupPartition {
  std::vector<std::int64_t> in_a;  // one entry per group
  std::vector<Side> link_side;     // one entry per link

  static GroupPartition all_on(const IntervalInstance& inst, Side s);
  bool operator==(const GroupPartition&) const = default;
};

/// Per-gadget lookup of the four role groups (indices into inst.groups,
/// -1 when absent).
struct GadgetGroups {
  int idx[4] = {-1, -1, -1, -1};
  int operator[](Role r) const { return idx[static_cast<int>(r)]; }
};
std::vector<GadgetGroups> index_gadgets(const IntervalInstance& inst);

/// How a link interval meets a gadget, decided purely from coordinates.
enum class Contact : std::uint8_t {
  None,
  Cover,        // meets every interval of the gadget
  FirstManner,  // only the right long intervals
  SecondManner, // only the left long intervals
  ThirdManner,  // left long and all left short intervals
  Irregular,    // anything else (partial contact)
};
Contact classify_contact(const IntervalInstance& inst, const GadgetGroups& gg,
                         const Interval& span);

/// Inclusive index range [first, last] of the group's members meeting x,
/// or nullopt when none do.
std::optional<std::pair<std::int64_t, std::int64_t>> members_intersecting(
    const IntervalGroup& g, const Interval& x);

/// Total number of intersecting pairs (the edge count of the represented
/// interval graph), computed analytically. Agrees with pairwise counting of
/// the materialization whenever the latter is permitted.
Big count_edges(const IntervalInstance& inst);

/// Exact cut size of a partition, computed without enumerating edges.
Big eval_cut_grouped(const IntervalInstance& inst, const GroupPartition& part);

/// Cut size split by structural category. Totals always match
/// eval_cut_grouped; incidences that fit no category land in `other`
/// (zero for instances produced by reduce).
struct CutBreakdown {
  Big gadget_internal;
  Big covering;
  Big first_manner;
  Big second_manner;
  Big third_manner;
  Big link_link;
  Big other;
  Big total() const;
};
CutBreakdown eval_cut_breakdown(const IntervalInstance& inst, const GroupPartition& part);

/// Pairwise-counting oracle over explicit intervals. Refuses more than
/// 10^4 intervals.
Big eval_cut_explicit(const std::vector<Interval>& intervals, const std::vector<Side>& sides);

struct MaterializedInterval {
  Interval iv;
  bool is_link = false;
  int owner_id = 0;          // group id or link id
  std::int64_t member = 0;   // member index within the group, 0 for links
};

/// Expands the instance to explicit intervals in the stable order: groups
/// as stored (members by index), links last. Refuses more than 10^6
/// intervals.
std::vector<MaterializedInterval> materialize(const IntervalInstance& inst);

/// Side vector aligned with materialize(inst) under the prefix convention.
std::vector<Side> sides_for_materialization(const IntervalInstance& inst,
                                            const GroupPartition& part);

/// One single-interval move: either one member of a group leaves side
/// `from`, or a link changes side ('from' is ignored for links).
struct FlipTarget {
  enum class Kind : std::uint8_t { GroupMember, Link } kind = Kind::GroupMember;
  int id = 0;
  Side from = Side::A;
};

/// Exact cut-size change of applying the flip, computed from the target's
/// neighborhood. eval(after) - eval(before) by construction.
Big flip_delta(const IntervalInstance& inst, const GroupPartition& part, const FlipTarget& t);

void apply_flip(const IntervalInstance& inst, GroupPartition& part, const FlipTarget& t);

}  // namespace ivmc
