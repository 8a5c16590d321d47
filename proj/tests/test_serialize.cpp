#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ivmc/serialize.hpp"

using namespace ivmc;

namespace {

IntervalInstance toy_instance() {
  return reduce(gen_k4(), params_override(4, 3, 7, 2, 5).params);
}

}  // namespace

TEST_CASE("instance round trip and byte determinism") {
  IntervalInstance inst = toy_instance();
  std::string text = instance_to_json(inst);
  CHECK(text == instance_to_json(inst));
  IntervalInstance back = instance_from_json(text);
  CHECK(back.params == inst.params);
  REQUIRE(back.groups.size() == inst.groups.size());
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    CHECK(back.groups[i].role == inst.groups[i].role);
    CHECK(back.groups[i].count == inst.groups[i].count);
    CHECK(back.groups[i].first_low == inst.groups[i].first_low);
    CHECK(back.groups[i].stride == inst.groups[i].stride);
  }
  REQUIRE(back.links.size() == inst.links.size());
  for (std::size_t i = 0; i < inst.links.size(); ++i) {
    CHECK(back.links[i].span == inst.links[i].span);
    CHECK(back.links[i].manner == inst.links[i].manner);
  }
  CHECK(instance_to_json(back) == text);
}

TEST_CASE("partition and cut round trips") {
  IntervalInstance inst = toy_instance();
  GroupPartition part = GroupPartition::all_on(inst, Side::A);
  part.in_a[3] = 2;
  part.link_side[7] = Side::B;
  std::string text = partition_to_json(part);
  GroupPartition back = partition_from_json(text);
  CHECK(back.in_a == part.in_a);
  CHECK(back.link_side == part.link_side);
  CHECK(partition_to_json(back) == text);

  VertexCut cut = VertexCut::from_string("CDDC");
  CHECK(cut_from_json(cut_to_json(cut)) == cut);
}

TEST_CASE("units round trip keeps order and correspondence") {
  UnitIntervalSet u = gen_two_clique_units(1);
  std::string text = units_to_json(u);
  UnitIntervalSet back = units_from_json(text);
  CHECK(back.unit_length == 100);
  CHECK(back.sorted == u.sorted);
  CHECK(back.original_index == u.original_index);
  CHECK(back.vertex_of == u.vertex_of);
  CHECK(units_to_json(back) == text);
}

TEST_CASE("big counters serialize as decimal strings") {
  IntervalInstance inst = toy_instance();
  Graph g = gen_k4();
  Params params = params_override(4, 3, 7, 2, 5).params;
  auto certs = certify_cuts(g, params, inst, {VertexCut::from_string("CCDD")});
  std::string text = certificates_to_json(certs);
  auto j = nlohmann::json::parse(text);
  const auto& c = j.at("certificates").at(0);
  CHECK(c.at("S").is_string());
  CHECK(c.at("F_paper").is_string());
  CHECK(c.at("S0").is_string());
  CHECK(c.at("slope_residuals").at(0).is_string());
  CHECK(c.at("x").is_number_integer());

  DecisionDoc dec{4, Big(1260), Big(1260 + 16), threshold_formula(params, 4).total()};
  auto dj = nlohmann::json::parse(decision_to_json(dec));
  CHECK(dj.at("F_paper").is_string());
  CHECK(dj.at("operative_threshold").get<std::string>() == "1276");
}

TEST_CASE("report documents carry their normative fields") {
  IntervalInstance inst = toy_instance();
  auto vj = nlohmann::json::parse(validation_to_json(validate_instance(inst)));
  CHECK(vj.at("predicates").size() == 7);
  CHECK(vj.at("all_pass").get<bool>());
  CHECK(vj.at("interval_count").get<std::string>() == "188");

  auto pj = nlohmann::json::parse(params_to_json(params_for(4)));
  CHECK(pj.at("params").at("qe").get<int>() == 161);
  CHECK(pj.at("all_hold").get<bool>());

  GroupPartition part = GroupPartition::all_on(inst, Side::A);
  part.in_a[1] = 3;
  auto aj = nlohmann::json::parse(audit_to_json(audit_moves(inst, part)));
  REQUIRE(!aj.at("violations").empty());
  const auto& v = aj.at("violations").at(0);
  CHECK(v.contains("gadget"));
  CHECK(v.contains("lemma"));
  CHECK(v.contains("move"));
  CHECK(v.contains("delta"));

  auto cj = nlohmann::json::parse(canonical_constant_to_json(
      canonical_constant(gen_k4(), inst.params, inst)));
  CHECK(cj.at("S0").get<std::string>() == "1260");
  CHECK(cj.at("covering_v_measured").get<std::string>() == "360");
  CHECK(cj.at("formula_terms").at("vertex_cover").get<std::string>() == "180");
}

TEST_CASE("parse failures carry context") {
  CHECK_THROWS_WITH_AS(instance_from_json("{"), doctest::Contains("malformed"), Error);
  CHECK_THROWS_WITH_AS(instance_from_json("{}"), doctest::Contains("params"), Error);
  CHECK_THROWS_WITH_AS(partition_from_json(R"({"group_counts": [], "link_sides": [{"link_id": 0, "side": "X"}]})"),
                       doctest::Contains("side"), Error);
  CHECK_THROWS_AS(cut_from_json(R"({"n": 3, "side": "CD"})"), Error);
  CHECK_THROWS_AS(units_from_json(R"({"unit_length": 5, "intervals": [{"low": 0, "high": 100}]})"),
                  Error);
}

TEST_CASE("solver result document shapes") {
  SolverResultDoc doc;
  doc.method = "greedy";
  doc.cut_size = Big(15);
  doc.sides = {Side::A, Side::B};
  doc.metadata.push_back({"phases", "6"});
  auto j = nlohmann::json::parse(solver_result_to_json(doc));
  CHECK(j.at("method") == "greedy");
  CHECK(j.at("cut_size").get<std::string>() == "15");
  CHECK(j.at("sides").size() == 2);
  CHECK(j.at("metadata").at("phases") == "6");

  IntervalInstance inst = toy_instance();
  GroupPartition part = GroupPartition::all_on(inst, Side::B);
  SolverResultDoc doc2;
  doc2.method = "local";
  doc2.cut_size = Big(0);
  doc2.partition = &part;
  auto j2 = nlohmann::json::parse(solver_result_to_json(doc2));
  CHECK(j2.at("partition").at("group_counts").size() == inst.groups.size());
}
