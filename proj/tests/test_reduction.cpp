#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ivmc/reduction.hpp"

using namespace ivmc;

namespace {

bool holds(const ParamReport& rep, const std::string& name) {
  for (const auto& p : rep.predicates)
    if (p.name == name) return p.holds;
  throw Error("no predicate named " + name);
}

}  // namespace

TEST_CASE("closed-form parameters") {
  ParamReport r4 = params_for(4);
  CHECK(r4.params.q == 12801);
  CHECK(r4.params.p == 25630);
  CHECK(r4.params.qe == 161);
  CHECK(r4.params.pe == 350);
  CHECK(r4.all_hold);
  CHECK(!r4.test_mode);

  ParamReport r10 = params_for(10);
  CHECK(r10.params.q == 200001);
  CHECK(r10.params.p == 400072);
  CHECK(r10.params.qe == 1001);
  CHECK(r10.params.pe == 2072);
  CHECK(r10.all_hold);

  CHECK_THROWS_AS(params_for(3), Error);
  CHECK_THROWS_AS(params_for(7), Error);
  CHECK_THROWS_AS(params_for(2), Error);
}

TEST_CASE("parameter predicates hold for every even n in [4, 50]") {
  for (std::int64_t n = 4; n <= 50; n += 2) {
    ParamReport rep = params_for(n);
    CHECK(rep.all_hold);
    CHECK(rep.params.q % 2 == 1);
    CHECK(rep.params.qe % 2 == 1);
  }
}

TEST_CASE("toy override is accepted and reports the failing predicates") {
  ParamReport rep = params_override(4, 3, 7, 2, 5);
  CHECK(rep.test_mode);
  CHECK(!rep.all_hold);
  // Direct evaluation: a1 (7 > 6) and a3 (10 > 8) hold; a2 (6 > 10),
  // a4 (8 > 144), b (9 > 96), c (4 > 72) and d (3 > 228) fail.
  CHECK(holds(rep, "a1"));
  CHECK(holds(rep, "a3"));
  CHECK(holds(rep, "q-odd"));
  auto fails = rep.failing();
  std::set<std::string> failset(fails.begin(), fails.end());
  CHECK(failset == std::set<std::string>{"a2", "a4", "b", "c", "d", "qe-odd"});
}

TEST_CASE("toy gadget layout matches the coordinate formulas") {
  Params toy{4, 3, 7, 2, 5};
  GadgetBuild b = build_gadget(true, toy, 0, 0, 0);
  const auto& g = b.groups;
  CHECK(g[0].role == Role::LeftLong);
  CHECK(g[0].count == 3);
  CHECK(g[0].member(0) == Interval{1, 18});
  CHECK(g[0].stride == 0);
  CHECK(g[1].member(0) == Interval{3, 4});
  CHECK(g[1].member(6) == Interval{15, 16});
  CHECK(g[2].member(0) == Interval{17, 34});
  CHECK(g[3].member(0) == Interval{19, 20});
  CHECK(g[3].member(6) == Interval{31, 32});
  CHECK(b.layout.first_slot == 33);
  CHECK(b.layout.second_slot == 2);
  CHECK(b.layout.third_slot == 16);
  CHECK(b.layout.window == Interval{0, 35});

  // The two long groups overlap on a region containing no short interval.
  Interval overlap{17, 18};
  CHECK(intersects(g[0].member(0), g[2].member(0)));
  for (std::int64_t k = 0; k < g[1].count; ++k) CHECK(!intersects(g[1].member(k), overlap));
  for (std::int64_t k = 0; k < g[3].count; ++k) CHECK(!intersects(g[3].member(k), overlap));

  GadgetBuild e = build_gadget(false, toy, 1, 4, 100);
  CHECK(e.layout.window == Interval{100, 127});  // 4p' + 7 = 27 wide
}

TEST_CASE("slot coordinates realize the intersection manners") {
  Params toy{4, 3, 7, 2, 5};
  GadgetBuild b = build_gadget(false, toy, 0, 0, 50);
  IntervalInstance inst;
  inst.params = toy;
  inst.groups.assign(b.groups.begin(), b.groups.end());
  auto gg = index_gadgets(inst)[0];
  // Links arrive from the left and stop at the slot coordinate.
  CHECK(classify_contact(inst, gg, Interval{0, b.layout.second_slot}) == Contact::SecondManner);
  CHECK(classify_contact(inst, gg, Interval{0, b.layout.third_slot}) == Contact::ThirdManner);
  CHECK(classify_contact(inst, gg, Interval{b.layout.first_slot, 500}) == Contact::FirstManner);
  CHECK(classify_contact(inst, gg, Interval{0, 500}) == Contact::Cover);
  // Reaches the left longs and only some left shorts: no recognized manner.
  CHECK(classify_contact(inst, gg, Interval{0, 60}) == Contact::Irregular);
  CHECK(classify_contact(inst, gg, Interval{0, 10}) == Contact::None);
  CHECK(classify_contact(inst, gg, Interval{b.layout.window.hi + 1, 500}) == Contact::None);
}

TEST_CASE("reduce on K4 with toy and standard parameters") {
  Graph k4 = gen_k4();
  Params toy = params_override(4, 3, 7, 2, 5).params;
  IntervalInstance toy_inst = reduce(k4, toy);
  CHECK(toy_inst.total_intervals() == Big(188));
  CHECK(toy_inst.links.size() == 24);
  CHECK(toy_inst.groups.size() == 40);
  ValidationReport toy_rep = validate_instance(toy_inst);
  for (const auto& p : toy_rep.predicates) {
    INFO(p.name, ": ", p.detail);
    CHECK(p.pass);
  }
  CHECK(toy_rep.all_pass);

  Params standard = params_for(4).params;
  IntervalInstance inst = reduce(k4, standard);
  CHECK(inst.total_intervals() == Big(313604));
  CHECK(inst.links.size() == 24);
  ValidationReport rep = validate_instance(inst);
  CHECK(rep.all_pass);
  CHECK(rep.interval_count == Big(313604));
  // Still inside the materialization bound.
  CHECK(materialize(inst).size() == 313604);
}

TEST_CASE("reduce validates across generators") {
  for (const Graph& g : {gen_prism(), gen_petersen(), gen_circulant(8, {1, 4})}) {
    Params params = params_for(g.n).params;
    IntervalInstance inst = reduce(g, params);
    ValidationReport rep = validate_instance(inst);
    INFO("n = ", g.n);
    CHECK(rep.all_pass);
  }
}

TEST_CASE("reduce rejects mismatched inputs") {
  CHECK_THROWS_AS(reduce(gen_k4(), params_for(6).params), Error);
  CHECK_THROWS_AS(reduce(gen_two_clique(1), params_for(8).params), Error);  // not cubic
}

TEST_CASE("covering structure of the arrangement") {
  Graph k4 = gen_k4();
  Params toy = params_override(4, 3, 7, 2, 5).params;
  IntervalInstance inst = reduce(k4, toy);
  auto gadgets = index_gadgets(inst);
  const int n = 4, m = 6;
  // V-gadget t is covered by the 6(t-1) links of earlier vertices; the
  // third V-gadget is covered by exactly 12.
  for (int t = 1; t <= n; ++t) {
    int covered = 0;
    for (const auto& l : inst.links)
      if (classify_contact(inst, gadgets[t - 1], l.span) == Contact::Cover) ++covered;
    CHECK(covered == 6 * (t - 1));
  }
  // E-gadget k is passed over by the links of every later edge.
  for (int k = 1; k <= m; ++k) {
    int covered = 0;
    for (const auto& l : inst.links)
      if (classify_contact(inst, gadgets[n + k - 1], l.span) == Contact::Cover) ++covered;
    CHECK(covered == 4 * (m - k));
  }
}

TEST_CASE("every pair of links meets: the link rows form a clique") {
  Graph k4 = gen_k4();
  IntervalInstance inst = reduce(k4, params_override(4, 3, 7, 2, 5).params);
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < inst.links.size(); ++i)
    for (std::size_t j = i + 1; j < inst.links.size(); ++j)
      if (intersects(inst.links[i].span, inst.links[j].span)) ++pairs;
  CHECK(pairs == 276);  // C(24, 2); also the (6n choose 2) upper bound
}

TEST_CASE("tampering is caught by the named predicate") {
  Graph k4 = gen_k4();
  Params toy = params_override(4, 3, 7, 2, 5).params;

  // Push one link past its target gadget's right-long start.
  IntervalInstance bad_manner = reduce(k4, toy);
  {
    auto gadgets = index_gadgets(bad_manner);
    const LinkInterval& l0 = bad_manner.links[0];
    int target_gadget = 4 + l0.target_edge - 1;
    const IntervalGroup& rl = bad_manner.groups[gadgets[target_gadget][Role::RightLong]];
    bad_manner.links[0].span.hi = rl.first_low;
    ValidationReport rep = validate_instance(bad_manner);
    CHECK(!rep.all_pass);
    CHECK(!rep.predicates[2].pass);  // link-target-manner
  }

  // Slide a whole gadget onto its neighbor.
  IntervalInstance bad_windows = reduce(k4, toy);
  {
    std::int64_t shift = 30;
    for (auto& g : bad_windows.groups)
      if (g.gadget == 0) {
        g.first_low += shift;
        g.first_high += shift;
      }
    ValidationReport rep = validate_instance(bad_windows);
    CHECK(!rep.all_pass);
    CHECK(!rep.predicates[0].pass);  // gadget-disjointness
    CHECK(rep.predicates[0].detail.find("overlap") != std::string::npos);
  }
}

TEST_CASE("more tampering: source slot and manner declaration") {
  Graph k4 = gen_k4();
  Params toy = params_override(4, 3, 7, 2, 5).params;

  // Pull a link's low end off the first-manner slot into the right shorts.
  IntervalInstance bad_source = reduce(k4, toy);
  bad_source.links[0].span.lo -= 2;
  {
    ValidationReport rep = validate_instance(bad_source);
    CHECK(!rep.all_pass);
    CHECK(!rep.predicates[1].pass);  // link-source-first-manner
  }

  // Flip a declared manner without touching coordinates.
  IntervalInstance bad_decl = reduce(k4, toy);
  bad_decl.links[0].manner = Manner::Third;
  {
    ValidationReport rep = validate_instance(bad_decl);
    CHECK(!rep.all_pass);
    CHECK(!rep.predicates[2].pass);  // link-target-manner
  }
}

TEST_CASE("override rejects non-positive parameters") {
  CHECK_THROWS_AS(params_override(4, 0, 7, 2, 5), Error);
  CHECK_THROWS_AS(params_override(4, 3, 7, -2, 5), Error);
  CHECK_THROWS_AS(params_override(5, 3, 7, 2, 5), Error);
}

TEST_CASE("reduction is deterministic") {
  Graph prism = gen_prism();
  Params params = params_for(6).params;
  IntervalInstance a = reduce(prism, params);
  IntervalInstance b = reduce(prism, params);
  REQUIRE(a.groups.size() == b.groups.size());
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].first_low == b.groups[i].first_low);
    CHECK(a.groups[i].count == b.groups[i].count);
  }
  REQUIRE(a.links.size() == b.links.size());
  for (std::size_t i = 0; i < a.links.size(); ++i) CHECK(a.links[i].span == b.links[i].span);
}
