#include "ivmc/serialize.hpp"

#include <json.hpp>

namespace ivmc {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(std::string(what) + ": malformed JSON");
  return j;
}

const Json& field(const Json& j, const char* name, const char* what) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(std::string(what) + ": missing field '" + name + "'");
  return *it;
}

std::int64_t i64_field(const Json& j, const char* name, const char* what) {
  const Json& f = field(j, name, what);
  if (!f.is_number_integer())
    throw Error(std::string(what) + ": field '" + name + "' must be an integer");
  return f.get<std::int64_t>();
}

std::string str_field(const Json& j, const char* name, const char* what) {
  const Json& f = field(j, name, what);
  if (!f.is_string()) throw Error(std::string(what) + ": field '" + name + "' must be a string");
  return f.get<std::string>();
}

const char* side_str(Side s) { return s == Side::A ? "A" : "B"; }

Side side_from(const std::string& s, const char* what) {
  if (s == "A") return Side::A;
  if (s == "B") return Side::B;
  throw Error(std::string(what) + ": side must be 'A' or 'B', got '" + s + "'");
}

Json breakdown_json(const CutBreakdown& b) {
  Json j;
  j["gadget_internal"] = b.gadget_internal.str();
  j["covering"] = b.covering.str();
  j["first_manner"] = b.first_manner.str();
  j["second_manner"] = b.second_manner.str();
  j["third_manner"] = b.third_manner.str();
  j["link_link"] = b.link_link.str();
  j["other"] = b.other.str();
  j["total"] = b.total().str();
  return j;
}

Json terms_json(const ThresholdTerms& t) {
  Json j;
  j["vertex_internal"] = t.vertex_internal.str();
  j["edge_internal"] = t.edge_internal.str();
  j["vertex_cover"] = t.vertex_cover.str();
  j["edge_cover"] = t.edge_cover.str();
  j["first_manner"] = t.first_manner.str();
  j["third_manner"] = t.third_manner.str();
  j["cut_term"] = t.cut_term.str();
  j["total"] = t.total().str();
  return j;
}

}  // namespace

std::string instance_to_json(const IntervalInstance& inst) {
  Json j;
  j["params"] = {{"n", inst.params.n},
                 {"q", inst.params.q},
                 {"p", inst.params.p},
                 {"qe", inst.params.qe},
                 {"pe", inst.params.pe}};
  j["groups"] = Json::array();
  for (const auto& g : inst.groups) {
    Json gj;
    gj["id"] = g.id;
    gj["gadget"] = g.gadget;
    gj["role"] = role_name(g.role);
    gj["count"] = g.count;
    gj["first_low"] = g.first_low;
    gj["first_high"] = g.first_high;
    gj["stride"] = g.stride;
    j["groups"].push_back(std::move(gj));
  }
  j["links"] = Json::array();
  for (const auto& l : inst.links) {
    Json lj;
    lj["id"] = l.id;
    lj["low"] = l.span.lo;
    lj["high"] = l.span.hi;
    lj["source_vertex"] = l.source_vertex;
    lj["target_edge"] = l.target_edge;
    lj["manner"] = l.manner == Manner::Second ? "second" : "third";
    j["links"].push_back(std::move(lj));
  }
  return dump(j);
}

IntervalInstance instance_from_json(const std::string& text) {
  const char* what = "instance";
  Json j = parse(text, what);
  IntervalInstance inst;
  const Json& pj = field(j, "params", what);
  inst.params.n = i64_field(pj, "n", what);
  inst.params.q = i64_field(pj, "q", what);
  inst.params.p = i64_field(pj, "p", what);
  inst.params.qe = i64_field(pj, "qe", what);
  inst.params.pe = i64_field(pj, "pe", what);
  for (const Json& gj : field(j, "groups", what)) {
    IntervalGroup g;
    g.id = static_cast<int>(i64_field(gj, "id", what));
    g.gadget = static_cast<int>(i64_field(gj, "gadget", what));
    g.role = role_from_name(str_field(gj, "role", what));
    g.count = i64_field(gj, "count", what);
    g.first_low = i64_field(gj, "first_low", what);
    g.first_high = i64_field(gj, "first_high", what);
    g.stride = i64_field(gj, "stride", what);
    inst.groups.push_back(g);
  }
  for (const Json& lj : field(j, "links", what)) {
    LinkInterval l;
    l.id = static_cast<int>(i64_field(lj, "id", what));
    l.span = Interval{i64_field(lj, "low", what), i64_field(lj, "high", what)};
    l.source_vertex = static_cast<int>(i64_field(lj, "source_vertex", what));
    l.target_edge = static_cast<int>(i64_field(lj, "target_edge", what));
    std::string manner = str_field(lj, "manner", what);
    if (manner == "second")
      l.manner = Manner::Second;
    else if (manner == "third")
      l.manner = Manner::Third;
    else
      throw Error("instance: link manner must be 'second' or 'third'");
    inst.links.push_back(l);
  }
  inst.check_basic();
  return inst;
}

std::string partition_to_json(const GroupPartition& part) {
  Json j;
  j["group_counts"] = Json::array();
  for (std::size_t i = 0; i < part.in_a.size(); ++i)
    j["group_counts"].push_back(Json{{"group_id", i}, {"in_a", part.in_a[i]}});
  j["link_sides"] = Json::array();
  for (std::size_t l = 0; l < part.link_side.size(); ++l)
    j["link_sides"].push_back(Json{{"link_id", l}, {"side", side_str(part.link_side[l])}});
  return dump(j);
}

GroupPartition partition_from_json(const std::string& text) {
  const char* what = "partition";
  Json j = parse(text, what);
  const Json& gc = field(j, "group_counts", what);
  const Json& ls = field(j, "link_sides", what);
  GroupPartition part;
  part.in_a.assign(gc.size(), 0);
  for (const Json& e : gc) {
    std::int64_t id = i64_field(e, "group_id", what);
    if (id < 0 || id >= static_cast<std::int64_t>(gc.size()))
      throw Error("partition: group_id out of range");
    part.in_a[id] = i64_field(e, "in_a", what);
  }
  part.link_side.assign(ls.size(), Side::A);
  for (const Json& e : ls) {
    std::int64_t id = i64_field(e, "link_id", what);
    if (id < 0 || id >= static_cast<std::int64_t>(ls.size()))
      throw Error("partition: link_id out of range");
    part.link_side[id] = side_from(str_field(e, "side", what), what);
  }
  return part;
}

std::string cut_to_json(const VertexCut& cut) {
  Json j;
  j["n"] = cut.size();
  j["side"] = cut.str();
  return dump(j);
}

VertexCut cut_from_json(const std::string& text) {
  const char* what = "cut";
  Json j = parse(text, what);
  std::int64_t n = i64_field(j, "n", what);
  VertexCut cut = VertexCut::from_string(str_field(j, "side", what));
  if (static_cast<std::int64_t>(cut.size()) != n)
    throw Error("cut: declared n does not match side string length");
  return cut;
}

std::string units_to_json(const UnitIntervalSet& u) {
  Json j;
  j["unit_length"] = u.unit_length;
  j["intervals"] = Json::array();
  // Emit in input order for stability.
  std::vector<Interval> in_input(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) in_input[u.original_index[k]] = u.sorted[k];
  for (std::size_t i = 0; i < in_input.size(); ++i) {
    Json e;
    e["id"] = i;
    e["low"] = in_input[i].lo;
    e["high"] = in_input[i].hi;
    if (!u.vertex_of.empty()) e["vertex"] = u.vertex_of[i];
    j["intervals"].push_back(std::move(e));
  }
  return dump(j);
}

UnitIntervalSet units_from_json(const std::string& text) {
  const char* what = "units";
  Json j = parse(text, what);
  std::vector<Interval> ivs;
  std::vector<int> vertex_of;
  bool any_vertex = false;
  for (const Json& e : field(j, "intervals", what)) {
    ivs.push_back(Interval{i64_field(e, "low", what), i64_field(e, "high", what)});
    if (e.contains("vertex")) {
      any_vertex = true;
      vertex_of.push_back(static_cast<int>(i64_field(e, "vertex", what)));
    } else {
      vertex_of.push_back(0);
    }
  }
  UnitIntervalSet u =
      UnitIntervalSet::from_intervals(ivs, any_vertex ? std::move(vertex_of) : std::vector<int>{});
  std::int64_t declared = i64_field(j, "unit_length", what);
  if (!ivs.empty() && declared != u.unit_length)
    throw Error("units: declared unit_length does not match intervals");
  return u;
}

std::string certificates_to_json(const std::vector<Certificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) {
    Json j;
    j["cut"] = c.cut.str();
    j["x"] = c.x;
    j["S"] = c.evaluated.str();
    j["F_paper"] = c.formula_value.str();
    j["S0"] = c.s0.str();
    j["slope_residuals"] = Json::array({c.residual.str()});
    arr.push_back(std::move(j));
  }
  Json root;
  root["certificates"] = std::move(arr);
  return dump(root);
}

std::string audit_to_json(const AuditReport& rep) {
  Json arr = Json::array();
  for (const auto& mv : rep.moves) {
    Json j;
    j["gadget"] = mv.gadget;
    j["lemma"] = mv.rule;
    j["move"] = mv.move;
    j["delta"] = mv.delta.str();
    arr.push_back(std::move(j));
  }
  Json root;
  root["violations"] = std::move(arr);
  return dump(root);
}

std::string validation_to_json(const ValidationReport& rep) {
  Json preds = Json::array();
  for (const auto& p : rep.predicates) {
    Json j;
    j["id"] = p.id;
    j["name"] = p.name;
    j["pass"] = p.pass;
    j["detail"] = p.detail;
    preds.push_back(std::move(j));
  }
  Json root;
  root["predicates"] = std::move(preds);
  root["all_pass"] = rep.all_pass;
  root["interval_count"] = rep.interval_count.str();
  root["link_count"] = rep.link_count;
  return dump(root);
}

std::string params_to_json(const ParamReport& rep) {
  Json preds = Json::array();
  for (const auto& p : rep.predicates) {
    Json j;
    j["name"] = p.name;
    j["expr"] = p.expr;
    j["holds"] = p.holds;
    preds.push_back(std::move(j));
  }
  Json root;
  root["params"] = {{"n", rep.params.n},
                    {"q", rep.params.q},
                    {"p", rep.params.p},
                    {"qe", rep.params.qe},
                    {"pe", rep.params.pe}};
  root["test_mode"] = rep.test_mode;
  root["predicates"] = std::move(preds);
  root["all_hold"] = rep.all_hold;
  return dump(root);
}

std::string canonical_constant_to_json(const CanonicalConstantReport& rep) {
  Json root;
  root["S0"] = rep.s0.str();
  root["categories"] = breakdown_json(rep.categories);
  root["covering_v_measured"] = rep.covering_v_measured.str();
  root["covering_e_measured"] = rep.covering_e_measured.str();
  root["formula_terms"] = terms_json(rep.formula_at_zero);
  root["delta_vs_formula"] = rep.delta_vs_formula.str();
  return dump(root);
}

std::string solver_result_to_json(const SolverResultDoc& doc) {
  Json root;
  root["method"] = doc.method;
  root["cut_size"] = doc.cut_size.str();
  if (doc.partition == nullptr) {
    Json sides = Json::array();
    for (Side s : doc.sides) sides.push_back(side_str(s));
    root["sides"] = std::move(sides);
  } else {
    Json gc = Json::array();
    for (std::size_t i = 0; i < doc.partition->in_a.size(); ++i)
      gc.push_back(Json{{"group_id", i}, {"in_a", doc.partition->in_a[i]}});
    Json ls = Json::array();
    for (std::size_t l = 0; l < doc.partition->link_side.size(); ++l)
      ls.push_back(Json{{"link_id", l}, {"side", side_str(doc.partition->link_side[l])}});
    root["partition"] = Json{{"group_counts", std::move(gc)}, {"link_sides", std::move(ls)}};
  }
  Json meta;
  for (const auto& [k, v] : doc.metadata) meta[k] = v;
  root["metadata"] = std::move(meta);
  return dump(root);
}

std::string decision_to_json(const DecisionDoc& doc) {
  Json root;
  root["x"] = doc.x;
  root["S0"] = doc.s0.str();
  root["operative_threshold"] = doc.operative_threshold.str();
  root["F_paper"] = doc.formula_value.str();
  return dump(root);
}

}  // namespace ivmc
