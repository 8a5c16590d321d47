#include "ivmc/certify.hpp"

#include <algorithm>

namespace ivmc {

namespace {

void check_instance_graph(const Graph& g, const Params& params, const IntervalInstance& inst) {
  if (g.n != params.n)
    throw Error("certify: graph has n = " + std::to_string(g.n) + ", params expect " +
                std::to_string(params.n));
  const std::size_t expect_gadgets = static_cast<std::size_t>(g.n + g.m());
  if (inst.groups.size() != 4 * expect_gadgets)
    throw Error("certify: instance has " + std::to_string(inst.groups.size()) +
                " groups, expected " + std::to_string(4 * expect_gadgets));
  if (inst.links.size() != static_cast<std::size_t>(4 * g.m()))
    throw Error("certify: instance has " + std::to_string(inst.links.size()) +
                " links, expected " + std::to_string(4 * g.m()));
}

VertexCut baseline_cut(int n) {
  VertexCut cut;
  cut.side.assign(n, 0);  // every vertex in C: the cut set is empty
  return cut;
}

}  // namespace

GroupPartition CanonicalPartition::as_group_partition(const IntervalInstance& inst) const {
  if (ll_rs_side.size() != static_cast<std::size_t>(inst.gadget_count()))
    throw Error("canonical partition: gadget count mismatch");
  if (link_side.size() != inst.links.size())
    throw Error("canonical partition: link count mismatch");
  GroupPartition part;
  part.in_a.reserve(inst.groups.size());
  for (const auto& g : inst.groups) {
    Side s = ll_rs_side[g.gadget];
    bool on_ll_rs_side = g.role == Role::LeftLong || g.role == Role::RightShort;
    Side mine = on_ll_rs_side ? s : opposite(s);
    part.in_a.push_back(mine == Side::A ? g.count : 0);
  }
  part.link_side = link_side;
  return part;
}

CanonicalPartition forward_partition(const Graph& g, const Params& params,
                                     const IntervalInstance& inst, const VertexCut& cut) {
  check_instance_graph(g, params, inst);
  if (static_cast<int>(cut.size()) != g.n)
    throw Error("forward_partition: cut has " + std::to_string(cut.size()) +
                " labels, graph has " + std::to_string(g.n));
  CanonicalPartition canon;
  canon.ll_rs_side.resize(g.n + g.m());
  canon.link_side.resize(inst.links.size());
  // Vertex in C: left-long + right-short + first-manner links to B.
  std::vector<Side> vertex_side(g.n);
  for (int v = 0; v < g.n; ++v) {
    vertex_side[v] = cut.side[v] ? Side::A : Side::B;
    canon.ll_rs_side[v] = vertex_side[v];
  }
  for (const auto& link : inst.links) canon.link_side[link.id] = vertex_side[link.source_vertex - 1];
  // E-gadget: left-long + right-short on the side of its third-manner links,
  // which come from the larger endpoint of the edge.
  for (int k = 0; k < g.m(); ++k) {
    int larger = g.edges[k].second;  // 0-based
    canon.ll_rs_side[g.n + k] = vertex_side[larger];
  }
  return canon;
}

Big ThresholdTerms::total() const {
  return vertex_internal + edge_internal + vertex_cover + edge_cover + first_manner +
         third_manner + cut_term;
}

ThresholdTerms threshold_formula(const Params& params, std::int64_t x) {
  const std::int64_t n = params.n;
  if (n < 4 || n % 2 != 0) throw Error("threshold_formula: invalid n");
  const std::int64_t m = 3 * n / 2;
  if (x < 0 || x > m)
    throw Error("threshold_formula: x = " + std::to_string(x) + " outside [0, " +
                std::to_string(m) + "]");
  const Big q = params.q, p = params.p, qe = params.qe, pe = params.pe;
  ThresholdTerms t;
  t.vertex_internal = (Big(2) * p * q + q * q) * Big(n);
  t.edge_internal = Big(m) * (Big(2) * pe * qe + qe * qe);
  t.vertex_cover = Big(3) * Big(n - 1) * Big(n - 2) * (p + q);
  t.edge_cover = Big(3) * Big(n) * Big(m - 1) * (pe + qe);
  t.first_manner = Big(6) * Big(n) * q;
  t.third_manner = Big(3) * Big(n) * pe;
  t.cut_term = Big(2) * Big(x) * qe;
  return t;
}

CanonicalConstantReport canonical_constant(const Graph& g, const Params& params,
                                           const IntervalInstance& inst) {
  check_instance_graph(g, params, inst);
  CanonicalConstantReport rep;
  GroupPartition base = forward_partition(g, params, inst, baseline_cut(g.n)).as_group_partition(inst);
  rep.categories = eval_cut_breakdown(inst, base);
  rep.s0 = rep.categories.total();
  rep.formula_at_zero = threshold_formula(params, 0);
  rep.delta_vs_formula = rep.s0 - rep.formula_at_zero.total();
  // Covering split by gadget kind, for the side-by-side report.
  auto gadgets = index_gadgets(inst);
  for (const auto& link : inst.links) {
    for (std::size_t h = 0; h < gadgets.size(); ++h) {
      if (classify_contact(inst, gadgets[h], link.span) != Contact::Cover) continue;
      Big c = 0;
      for (int r = 0; r < 4; ++r) {
        int gi = gadgets[h].idx[r];
        if (gi < 0) continue;
        const auto& grp = inst.groups[gi];
        auto range = members_intersecting(grp, link.span);
        if (!range) continue;
        std::int64_t in_a = base.in_a[gi];
        std::int64_t a_cnt = std::min(range->second + 1, in_a) - std::min(range->first, in_a);
        std::int64_t touched = range->second - range->first + 1;
        c += Big(base.link_side[link.id] == Side::A ? touched - a_cnt : a_cnt);
      }
      if (static_cast<std::int64_t>(h) < params.n)
        rep.covering_v_measured += c;
      else
        rep.covering_e_measured += c;
    }
  }
  return rep;
}

AffineReport affine_check(const Graph& g, const Params& params, const IntervalInstance& inst,
                          const std::vector<VertexCut>& cuts) {
  check_instance_graph(g, params, inst);
  AffineReport rep;
  GroupPartition base = forward_partition(g, params, inst, baseline_cut(g.n)).as_group_partition(inst);
  rep.s0 = eval_cut_grouped(inst, base);
  rep.all_zero = true;
  for (const auto& cut : cuts) {
    AffineRow row;
    row.cut = cut;
    row.x = eval_cut_graph(g, cut);
    GroupPartition part = forward_partition(g, params, inst, cut).as_group_partition(inst);
    row.evaluated = eval_cut_grouped(inst, part);
    row.residual = row.evaluated - rep.s0 - Big(2) * Big(row.x) * Big(params.qe);
    if (!row.residual.is_zero()) rep.all_zero = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

VertexCut extract_cut(const Graph& g, const IntervalInstance& inst, const GroupPartition& part) {
  inst.check_basic();
  if (part.in_a.size() != inst.groups.size())
    throw Error("extract_cut: partition/instance group count mismatch");
  auto gadgets = index_gadgets(inst);
  if (static_cast<int>(gadgets.size()) < g.n)
    throw Error("extract_cut: instance has fewer gadgets than graph vertices");
  VertexCut cut;
  cut.side.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    const auto& gg = gadgets[v];
    Side side_of[4];
    for (int r = 0; r < 4; ++r) {
      int gi = gg.idx[r];
      if (gi < 0) throw Error("extract_cut: V-gadget " + std::to_string(v + 1) + " lacks a role group");
      std::int64_t a = part.in_a[gi];
      std::int64_t c = inst.groups[gi].count;
      if (a != 0 && a != c) {
        int rule = (r == 1 || r == 3) ? 1 : 2;
        throw Error("extract_cut: V-gadget " + std::to_string(v + 1) + " violates structure rule " +
                    std::to_string(rule) + ": " + role_name(static_cast<Role>(r)) +
                    " group is split " + std::to_string(a) + "/" + std::to_string(c - a));
      }
      side_of[r] = a == c ? Side::A : Side::B;
    }
    Side ll = side_of[0], ls = side_of[1], rl = side_of[2], rs = side_of[3];
    if (ll != rs || rl != ls || ll == rl)
      throw Error("extract_cut: V-gadget " + std::to_string(v + 1) +
                  " violates structure rule 3: left-long/right-short must oppose "
                  "right-long/left-short");
    cut.side[v] = ll == Side::B ? 0 : 1;  // forward places C as left-long+right-short in B
  }
  return cut;
}

namespace {

struct ShortNeighborTally {
  Big on_a;
  Big on_b;
};

// Side tally of everything a short-group member intersects, computed on the
// first member (predicate 7 of validate_instance is what makes this
// representative member faithful for the whole group).
ShortNeighborTally short_tally(const IntervalInstance& inst, const GroupPartition& part,
                               int group_idx) {
  const auto& s = inst.groups[group_idx];
  Interval rep = s.member(0);
  ShortNeighborTally t;
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    if (static_cast<int>(i) == group_idx) continue;
    auto r = members_intersecting(inst.groups[i], rep);
    if (!r) continue;
    std::int64_t lo = r->first, hi = r->second;
    std::int64_t a_cnt = std::min(hi + 1, part.in_a[i]) - std::min(lo, part.in_a[i]);
    t.on_a += Big(a_cnt);
    t.on_b += Big(hi - lo + 1 - a_cnt);
  }
  for (std::size_t l = 0; l < inst.links.size(); ++l) {
    if (!intersects(inst.links[l].span, rep)) continue;
    if (part.link_side[l] == Side::A)
      t.on_a += 1;
    else
      t.on_b += 1;
  }
  return t;
}

std::string side_name(Side s) { return s == Side::A ? "A" : "B"; }

// Moves `count` members of the group off side `from`, one flip at a time,
// accumulating the exact sequential delta.
Big move_members(const IntervalInstance& inst, GroupPartition& part, int group_idx,
                 Side from, std::int64_t count) {
  FlipTarget t{FlipTarget::Kind::GroupMember, inst.groups[group_idx].id, from};
  Big total = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    total += flip_delta(inst, part, t);
    apply_flip(inst, part, t);
  }
  return total;
}

}  // namespace

AuditReport audit_moves(const IntervalInstance& inst, const GroupPartition& part_in) {
  inst.check_basic();
  GroupPartition part = part_in;
  // Dimension/bounds validation happens inside the evaluators.
  (void)eval_cut_grouped(inst, part);
  auto gadgets = index_gadgets(inst);
  const std::int64_t n = inst.params.n;
  AuditReport rep;

  auto emit = [&](int gadget, int rule, std::string text, Big delta, int group_id,
                  std::int64_t moved, Side from, bool compound) {
    rep.moves.push_back(AuditMove{gadget, rule, std::move(text), delta, group_id, moved, from,
                                  compound});
  };

  for (std::size_t h = 0; h < gadgets.size(); ++h) {
    const bool is_v = static_cast<std::int64_t>(h) < n;
    const auto& gg = gadgets[h];
    // Shorts first: members must sit opposite the majority of their
    // long + covering-link neighborhood (strict by parity).
    for (Role role : {Role::LeftShort, Role::RightShort}) {
      int gi = gg[role];
      if (gi < 0) continue;
      ShortNeighborTally t = short_tally(inst, part, gi);
      if (t.on_a == t.on_b) continue;  // no strict majority, nothing prescribed
      Side majority = t.on_a > t.on_b ? Side::A : Side::B;
      std::int64_t wrong = majority == Side::A ? part.in_a[gi]
                                               : inst.groups[gi].count - part.in_a[gi];
      if (wrong == 0) continue;
      Big delta = move_members(inst, part, gi, majority, wrong);
      emit(static_cast<int>(h), is_v ? 1 : 5,
           "move " + std::to_string(wrong) + " " + role_name(role) + " members from " +
               side_name(majority) + " to " + side_name(opposite(majority)),
           delta, inst.groups[gi].id, wrong, majority, false);
    }
    // Longs: no member may share a side with its own short row.
    for (Role role : {Role::LeftLong, Role::RightLong}) {
      int gi = gg[role];
      if (gi < 0) continue;
      Role srole = role == Role::LeftLong ? Role::LeftShort : Role::RightShort;
      int si = gg[srole];
      if (si < 0) continue;
      std::int64_t sa = part.in_a[si];
      if (sa != 0 && sa != inst.groups[si].count) continue;  // shorts still split, skip
      Side short_side = sa == inst.groups[si].count ? Side::A : Side::B;
      std::int64_t wrong = short_side == Side::A ? part.in_a[gi]
                                                 : inst.groups[gi].count - part.in_a[gi];
      if (wrong == 0) continue;
      Big delta = move_members(inst, part, gi, short_side, wrong);
      emit(static_cast<int>(h), is_v ? 2 : 5,
           "move " + std::to_string(wrong) + " " + role_name(role) + " members from " +
               side_name(short_side) + " to " + side_name(opposite(short_side)),
           delta, inst.groups[gi].id, wrong, short_side, false);
    }
    // Pairing: both shorts on one side and both longs on the other calls for
    // the compound right-side swap.
    {
      int ll = gg[Role::LeftLong], ls = gg[Role::LeftShort];
      int rl = gg[Role::RightLong], rs = gg[Role::RightShort];
      if (ll < 0 || ls < 0 || rl < 0 || rs < 0) continue;
      auto mono_side = [&](int gi) -> int {
        if (part.in_a[gi] == inst.groups[gi].count) return 0;  // A
        if (part.in_a[gi] == 0) return 1;                      // B
        return -1;
      };
      int sll = mono_side(ll), sls = mono_side(ls), srl = mono_side(rl), srs = mono_side(rs);
      if (sll < 0 || sls < 0 || srl < 0 || srs < 0) continue;
      if (sll == srl && sls == srs && sll != sls) {
        Side long_side = sll == 0 ? Side::A : Side::B;
        Side short_side = opposite(long_side);
        Big before = eval_cut_grouped(inst, part);
        // Swap the right-side groups: right shorts join the longs' side,
        // right longs join the shorts' side.
        part.in_a[rs] = long_side == Side::A ? inst.groups[rs].count : 0;
        part.in_a[rl] = short_side == Side::A ? inst.groups[rl].count : 0;
        Big delta = eval_cut_grouped(inst, part) - before;
        emit(static_cast<int>(h), is_v ? 3 : 5,
             "swap right-short group to " + side_name(long_side) + " and right-long group to " +
                 side_name(short_side),
             delta, inst.groups[rs].id, inst.groups[rs].count + inst.groups[rl].count,
             short_side, true);
      }
    }
  }
  return rep;
}

LocalOptReport local_optimality_check(const IntervalInstance& inst, const GroupPartition& part) {
  LocalOptReport rep;
  bool first = true;
  auto consider = [&](const FlipTarget& t) {
    Big d = flip_delta(inst, part, t);
    ++rep.targets_checked;
    if (first || d > rep.worst_delta) {
      rep.worst_delta = d;
      rep.worst_target = t;
      first = false;
    }
  };
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    if (part.in_a[i] > 0) consider(FlipTarget{FlipTarget::Kind::GroupMember, static_cast<int>(i), Side::A});
    if (part.in_a[i] < inst.groups[i].count)
      consider(FlipTarget{FlipTarget::Kind::GroupMember, static_cast<int>(i), Side::B});
  }
  for (std::size_t l = 0; l < inst.links.size(); ++l)
    consider(FlipTarget{FlipTarget::Kind::Link, static_cast<int>(l), Side::A});
  rep.locally_optimal = first || rep.worst_delta <= Big(0);
  return rep;
}

std::vector<Certificate> certify_cuts(const Graph& g, const Params& params,
                                      const IntervalInstance& inst,
                                      const std::vector<VertexCut>& cuts) {
  AffineReport affine = affine_check(g, params, inst, cuts);
  std::vector<Certificate> out;
  out.reserve(cuts.size());
  for (const auto& row : affine.rows) {
    Certificate cert;
    cert.cut = row.cut;
    cert.x = row.x;
    cert.evaluated = row.evaluated;
    cert.formula_value = threshold_formula(params, row.x).total();
    cert.s0 = affine.s0;
    cert.residual = row.residual;
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace ivmc
