#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ivmc/graph.hpp"
#include "ivmc/instance.hpp"

namespace ivmc {

struct ParamPredicate {
  std::string name;   // e.g. "b"
  std::string expr;   // human-readable comparison with substituted values
  bool holds = false;
};

struct ParamReport {
  Params params;
  bool test_mode = false;  // true when the values were overridden
  std::vector<ParamPredicate> predicates;
  bool all_hold = false;

  std::vector<std::string> failing() const;
};

/// Standard parameters for a cubic graph on n vertices:
///   q = 200n^3 + 1,  p = 2q + 7n,  q' = 10n^2 + 1,  p' = 2q' + 7n.
/// All predicates are verified; a failure is an internal error since the
/// closed forms satisfy them for every even n >= 4.
ParamReport params_for(std::int64_t n);

/// Explicit parameter override (test mode). Predicates are evaluated and
/// reported but construction stays permitted even when they fail, so toy
/// instances remain small enough for brute-force verification.
ParamReport params_override(std::int64_t n, std::int64_t q, std::int64_t p, std::int64_t qe,
                            std::int64_t pe);

/// Reserved coordinates of one gadget. The *-slot coordinates are the
/// single-point contact positions that realize each intersection manner.
struct GadgetLayout {
  int gadget = 0;
  bool vertex_kind = true;
  Interval window;
  std::int64_t second_slot = 0;
  std::int64_t third_slot = 0;
  std::int64_t first_slot = 0;
};

struct GadgetBuild {
  std::array<IntervalGroup, 4> groups;  // left-long, left-short, right-long, right-short
  GadgetLayout layout;
};

/// Lays one gadget out at the given base coordinate. With Q = q or q',
/// P = p or p' by kind:
///   left longs   Q x [base+1, base+2P+4]
///   left shorts  P intervals [base+2k+3, base+2k+4]
///   right longs  Q x [base+2P+3, base+4P+6]
///   right shorts P intervals [base+2P+5+2k, base+2P+6+2k]
///   slots: second = base+2, third = base+2P+2, first = base+4P+5
///   window [base, base+4P+7]
GadgetBuild build_gadget(bool vertex_kind, const Params& params, int gadget_index,
                         int first_group_id, std::int64_t base);

/// Compiles a cubic graph into its interval instance: V-gadgets in vertex
/// order, then E-gadgets in edge order, bases advancing by window width + 2;
/// per edge (v_i, v_j) with i < j, two links from v_i's first-manner slot to
/// the edge gadget's second-manner slot and two from v_j's to its
/// third-manner slot.
IntervalInstance reduce(const Graph& g, const Params& params);

struct PredicateResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<PredicateResult> predicates;
  bool all_pass = false;
  Big interval_count;
  std::int64_t link_count = 0;
};

/// Structural validation by coordinate-level intersection tests on group
/// representatives and short-group extremal members:
///   1 gadget disjointness
///   2 every link meets its source V-gadget in exactly the first manner
///   3 manner at the target matches the link's declaration
///   4 covering counts: V-gadget t is covered by 6(t-1) links and E-gadget
///     k by 4(m-k); over the E-row these counts form {4(j-1) : j=1..m}
///   5 exactly 6 links meet each V-gadget in the first manner
///   6 exactly 2 second-manner and 2 third-manner links per E-gadget
///   7 every member of a short group has the same external neighborhood
ValidationReport validate_instance(const IntervalInstance& inst);

}  // namespace ivmc
