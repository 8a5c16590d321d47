#include "ivmc/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace ivmc {

namespace {

Big nine_n2(std::int64_t n) { return Big(9) * Big(n) * Big(n); }

std::string cmp_expr(const std::string& lhs, const Big& lv, const std::string& rhs,
                     const Big& rv) {
  std::ostringstream os;
  os << lhs << " = " << lv << (lv > rv ? " > " : " <= ") << rhs << " = " << rv;
  return os.str();
}

ParamReport evaluate_params(Params pr, bool test_mode) {
  ParamReport rep;
  rep.params = pr;
  rep.test_mode = test_mode;
  const Big q = pr.q, p = pr.p, qe = pr.qe, pe = pr.pe, n = pr.n;
  auto add = [&](const std::string& name, const std::string& lhs, Big lv, const std::string& rhs,
                 Big rv) {
    rep.predicates.push_back(ParamPredicate{name, cmp_expr(lhs, lv, rhs, rv), lv > rv});
  };
  // Chain (a) split into its four comparisons, evaluated independently.
  add("a1", "p", p, "2q", Big(2) * q);
  add("a2", "2q", Big(2) * q, "2p'", Big(2) * pe);
  add("a3", "2p'", Big(2) * pe, "4q'", Big(4) * qe);
  add("a4", "4q'", Big(4) * qe, "9n^2", nine_n2(pr.n));
  add("b", "q^2", q * q, "(p-q)*6n", (p - q) * Big(6) * n);
  add("c", "q'^2", qe * qe, "(p'-q')*6n", (pe - qe) * Big(6) * n);
  add("d", "q", q, "3(p'+q')n + 9n^2", Big(3) * (pe + qe) * n + nine_n2(pr.n));
  rep.predicates.push_back(
      ParamPredicate{"q-odd", "q = " + q.str(), pr.q % 2 != 0});
  rep.predicates.push_back(
      ParamPredicate{"qe-odd", "q' = " + qe.str(), pr.qe % 2 != 0});
  rep.all_hold = std::all_of(rep.predicates.begin(), rep.predicates.end(),
                             [](const ParamPredicate& p) { return p.holds; });
  return rep;
}

}  // namespace

std::vector<std::string> ParamReport::failing() const {
  std::vector<std::string> out;
  for (const auto& p : predicates)
    if (!p.holds) out.push_back(p.name);
  return out;
}

ParamReport params_for(std::int64_t n) {
  if (n < 4 || n % 2 != 0)
    throw Error("params_for: n must be an even integer >= 4, got " + std::to_string(n));
  Params pr;
  pr.n = n;
  pr.q = 200 * n * n * n + 1;
  pr.p = 2 * pr.q + 7 * n;
  pr.qe = 10 * n * n + 1;
  pr.pe = 2 * pr.qe + 7 * n;
  ParamReport rep = evaluate_params(pr, false);
  if (!rep.all_hold) {
    std::string names;
    for (const auto& f : rep.failing()) names += " " + f;
    throw Error("params_for: internal error, predicate(s) failed for n = " + std::to_string(n) +
                ":" + names);
  }
  return rep;
}

ParamReport params_override(std::int64_t n, std::int64_t q, std::int64_t p, std::int64_t qe,
                            std::int64_t pe) {
  if (n < 4 || n % 2 != 0)
    throw Error("params_override: n must be an even integer >= 4, got " + std::to_string(n));
  if (q < 1 || p < 1 || qe < 1 || pe < 1)
    throw Error("params_override: parameters must be positive");
  Params pr{n, q, p, qe, pe};
  return evaluate_params(pr, true);
}

GadgetBuild build_gadget(bool vertex_kind, const Params& params, int gadget_index,
                         int first_group_id, std::int64_t base) {
  if (base < 0) throw Error("build_gadget: base must be nonnegative");
  const std::int64_t Q = vertex_kind ? params.q : params.qe;
  const std::int64_t P = vertex_kind ? params.p : params.pe;
  if (Q < 1 || P < 1) throw Error("build_gadget: parameters must be positive");
  GadgetBuild out;
  auto& g = out.groups;
  g[0] = IntervalGroup{first_group_id + 0, gadget_index, Role::LeftLong, Q, base + 1,
                       base + 2 * P + 4, 0};
  g[1] = IntervalGroup{first_group_id + 1, gadget_index, Role::LeftShort, P, base + 3,
                       base + 4, 2};
  g[2] = IntervalGroup{first_group_id + 2, gadget_index, Role::RightLong, Q, base + 2 * P + 3,
                       base + 4 * P + 6, 0};
  g[3] = IntervalGroup{first_group_id + 3, gadget_index, Role::RightShort, P,
                       base + 2 * P + 5, base + 2 * P + 6, 2};
  out.layout = GadgetLayout{gadget_index, vertex_kind,
                            Interval{base, base + 4 * P + 7},
                            base + 2, base + 2 * P + 2, base + 4 * P + 5};
  return out;
}

IntervalInstance reduce(const Graph& g, const Params& params) {
  g.validate();
  if (!g.cubic) throw Error("reduce: input graph must be cubic");
  if (g.n != params.n)
    throw Error("reduce: params are for n = " + std::to_string(params.n) + ", graph has n = " +
                std::to_string(g.n));
  const int n = g.n;
  const int m = g.m();
  IntervalInstance inst;
  inst.params = params;
  inst.groups.reserve(4 * (n + m));
  std::vector<GadgetLayout> layouts;
  layouts.reserve(n + m);
  std::int64_t base = 0;
  for (int i = 0; i < n + m; ++i) {
    bool vertex_kind = i < n;
    GadgetBuild b = build_gadget(vertex_kind, params, i, 4 * i, base);
    for (const auto& grp : b.groups) inst.groups.push_back(grp);
    layouts.push_back(b.layout);
    base = b.layout.window.hi + 2;
  }
  inst.links.reserve(4 * m);
  for (int k = 0; k < m; ++k) {
    auto [u, v] = g.edges[k];  // 0-based, u < v
    const GadgetLayout& eg = layouts[n + k];
    int id = 4 * k;
    for (int copy = 0; copy < 2; ++copy)
      inst.links.push_back(LinkInterval{id++, Interval{layouts[u].first_slot, eg.second_slot},
                                        u + 1, k + 1, Manner::Second});
    for (int copy = 0; copy < 2; ++copy)
      inst.links.push_back(LinkInterval{id++, Interval{layouts[v].first_slot, eg.third_slot},
                                        v + 1, k + 1, Manner::Third});
  }
  inst.check_basic();
  // Interval count closed form: n(2p+2q) + m(2p'+2q') + 6n.
  Big expect = Big(n) * (Big(2) * params.p + Big(2) * params.q) +
               Big(m) * (Big(2) * params.pe + Big(2) * params.qe) + Big(6) * Big(n);
  if (inst.total_intervals() != expect)
    throw Error("reduce: internal error, interval count " + inst.total_intervals().str() +
                " != " + expect.str());
  return inst;
}

namespace {

struct GadgetHull {
  int gadget;
  Interval hull;
};

}  // namespace

ValidationReport validate_instance(const IntervalInstance& inst) {
  inst.check_basic();
  ValidationReport rep;
  rep.interval_count = inst.total_intervals();
  rep.link_count = static_cast<std::int64_t>(inst.links.size());
  auto gadgets = index_gadgets(inst);
  const int n_gadgets = static_cast<int>(gadgets.size());
  const std::int64_t n = inst.params.n;
  const std::int64_t m = n_gadgets - n;  // E-gadget count per stored layout

  auto add = [&](int id, const std::string& name, bool pass, std::string detail) {
    rep.predicates.push_back(PredicateResult{id, name, pass, std::move(detail)});
  };

  // 1: no interval of one gadget meets an interval of another gadget.
  {
    std::vector<GadgetHull> hulls;
    for (int h = 0; h < n_gadgets; ++h) {
      Interval hull{0, 0};
      bool first = true;
      for (int r = 0; r < 4; ++r) {
        int gi = gadgets[h].idx[r];
        if (gi < 0) continue;
        Interval gh = inst.groups[gi].hull();
        if (first) {
          hull = gh;
          first = false;
        } else {
          hull.lo = std::min(hull.lo, gh.lo);
          hull.hi = std::max(hull.hi, gh.hi);
        }
      }
      if (!first) hulls.push_back(GadgetHull{h, hull});
    }
    std::sort(hulls.begin(), hulls.end(),
              [](const GadgetHull& a, const GadgetHull& b) { return a.hull.lo < b.hull.lo; });
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i + 1 < hulls.size(); ++i) {
      if (intersects(hulls[i].hull, hulls[i + 1].hull)) {
        pass = false;
        detail = "gadgets " + std::to_string(hulls[i].gadget) + " and " +
                 std::to_string(hulls[i + 1].gadget) + " overlap";
        break;
      }
    }
    add(1, "gadget-disjointness", pass, detail);
  }

  // Contact classification matrix, reused by predicates 2-6.
  std::vector<std::vector<Contact>> contact(inst.links.size(),
                                            std::vector<Contact>(n_gadgets, Contact::None));
  for (std::size_t l = 0; l < inst.links.size(); ++l)
    for (int h = 0; h < n_gadgets; ++h)
      contact[l][h] = classify_contact(inst, gadgets[h], inst.links[l].span);

  // 2: first manner at the declared source V-gadget.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t l = 0; l < inst.links.size(); ++l) {
      int src = inst.links[l].source_vertex - 1;
      if (src < 0 || src >= n) {
        pass = false;
        detail = "link " + std::to_string(l) + " has source vertex out of range";
        break;
      }
      if (contact[l][src] != Contact::FirstManner) {
        pass = false;
        detail = "link " + std::to_string(l) + " does not meet gadget " + std::to_string(src) +
                 " in the first manner";
        break;
      }
    }
    add(2, "link-source-first-manner", pass, detail);
  }

  // 3: manner at the declared target matches the declaration.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t l = 0; l < inst.links.size(); ++l) {
      int tgt = static_cast<int>(n) + inst.links[l].target_edge - 1;
      if (tgt < n || tgt >= n_gadgets) {
        pass = false;
        detail = "link " + std::to_string(l) + " has target edge out of range";
        break;
      }
      Contact want =
          inst.links[l].manner == Manner::Second ? Contact::SecondManner : Contact::ThirdManner;
      if (contact[l][tgt] != want) {
        pass = false;
        detail = "link " + std::to_string(l) + " does not meet its target gadget " +
                 std::to_string(tgt) + " in the declared manner";
        break;
      }
    }
    add(3, "link-target-manner", pass, detail);
  }

  // Covering counts per gadget.
  std::vector<std::int64_t> covers(n_gadgets, 0);
  for (std::size_t l = 0; l < inst.links.size(); ++l)
    for (int h = 0; h < n_gadgets; ++h)
      if (contact[l][h] == Contact::Cover) ++covers[h];

  // 4: V-gadget t covered by 6(t-1); E-gadget k covered by 4(m-k), i.e. the
  // E-row counts form the multiset {4(j-1) : j = 1..m}.
  {
    bool pass = true;
    std::string detail;
    for (std::int64_t t = 1; t <= n && pass; ++t) {
      if (covers[t - 1] != 6 * (t - 1)) {
        pass = false;
        detail = "V-gadget " + std::to_string(t) + " covered by " + std::to_string(covers[t - 1]) +
                 " links, expected " + std::to_string(6 * (t - 1));
      }
    }
    for (std::int64_t k = 1; k <= m && pass; ++k) {
      if (covers[n + k - 1] != 4 * (m - k)) {
        pass = false;
        detail = "E-gadget " + std::to_string(k) + " covered by " +
                 std::to_string(covers[n + k - 1]) + " links, expected " +
                 std::to_string(4 * (m - k));
      }
    }
    if (pass && detail.empty())
      detail = "E-row counts form {4(j-1) : j = 1.." + std::to_string(m) + "}";
    add(4, "covering-counts", pass, detail);
  }

  // 5: exactly 6 first-manner links per V-gadget.
  {
    bool pass = true;
    std::string detail;
    for (int h = 0; h < n && pass; ++h) {
      std::int64_t c = 0;
      for (std::size_t l = 0; l < inst.links.size(); ++l)
        if (contact[l][h] == Contact::FirstManner) ++c;
      if (c != 6) {
        pass = false;
        detail = "V-gadget " + std::to_string(h + 1) + " has " + std::to_string(c) +
                 " first-manner links, expected 6";
      }
    }
    add(5, "first-manner-count", pass, detail);
  }

  // 6: exactly 2 second-manner and 2 third-manner links per E-gadget.
  {
    bool pass = true;
    std::string detail;
    for (int h = static_cast<int>(n); h < n_gadgets && pass; ++h) {
      std::int64_t c2 = 0, c3 = 0;
      for (std::size_t l = 0; l < inst.links.size(); ++l) {
        if (contact[l][h] == Contact::SecondManner) ++c2;
        if (contact[l][h] == Contact::ThirdManner) ++c3;
      }
      if (c2 != 2 || c3 != 2) {
        pass = false;
        detail = "E-gadget " + std::to_string(h - n + 1) + " has " + std::to_string(c2) +
                 " second-manner and " + std::to_string(c3) + " third-manner links, expected 2+2";
      }
    }
    add(6, "target-manner-counts", pass, detail);
  }

  // 7: short-group neighborhood uniformity. Every external representative
  // (one member of stride-0 groups, the extremal members of progressions,
  // every link) must meet all members of a short group or none.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t si = 0; si < inst.groups.size() && pass; ++si) {
      const auto& s = inst.groups[si];
      if (s.role != Role::LeftShort && s.role != Role::RightShort) continue;
      auto check_rep = [&](const Interval& x, const std::string& what) {
        auto r = members_intersecting(s, x);
        std::int64_t touched = r ? r->second - r->first + 1 : 0;
        if (touched != 0 && touched != s.count) {
          pass = false;
          detail = what + " meets " + std::to_string(touched) + " of " +
                   std::to_string(s.count) + " members of group " + std::to_string(s.id);
        }
      };
      for (std::size_t oi = 0; oi < inst.groups.size() && pass; ++oi) {
        if (oi == si) continue;
        const auto& o = inst.groups[oi];
        check_rep(o.member(0), "group " + std::to_string(o.id));
        if (pass && o.stride != 0 && o.count > 1)
          check_rep(o.member(o.count - 1), "group " + std::to_string(o.id));
      }
      for (std::size_t l = 0; l < inst.links.size() && pass; ++l)
        check_rep(inst.links[l].span, "link " + std::to_string(l));
    }
    add(7, "short-group-uniformity", pass, detail);
  }

  rep.all_pass = std::all_of(rep.predicates.begin(), rep.predicates.end(),
                             [](const PredicateResult& p) { return p.pass; });
  return rep;
}

}  // namespace ivmc
