// ivmc: generate cubic graphs, compile them to interval Max Cut instances,
// validate the construction, certify cuts, audit partitions and run solvers.
//
// Exit codes: 0 all checks passed; 1 a check ran and failed (named on
// stderr); 2 usage, I/O or bound errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ivmc/certify.hpp"
#include "ivmc/graph.hpp"
#include "ivmc/reduction.hpp"
#include "ivmc/serialize.hpp"
#include "ivmc/solvers.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ivmc;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc;
  else
    write_file(out_path, doc);
}

Graph load_graph(const std::string& path, bool require_cubic) {
  std::string text = read_file(path);
  return require_cubic ? parse_graph(text) : parse_graph_any(text);
}

struct GenOptions {
  std::string family;
  int a = 1;
  int n = 0;
  std::vector<int> offsets;
  std::string out;
  std::string units_out;
};

int run_gen(const GenOptions& opt) {
  Graph g;
  if (opt.family == "k4") {
    g = gen_k4();
  } else if (opt.family == "prism") {
    g = gen_prism();
  } else if (opt.family == "petersen") {
    g = gen_petersen();
  } else if (opt.family == "two-clique") {
    g = gen_two_clique(opt.a);
  } else if (opt.family == "circulant") {
    if (opt.n <= 0) throw Error("gen: circulant requires --n");
    if (opt.offsets.empty()) throw Error("gen: circulant requires --offsets");
    g = gen_circulant(opt.n, opt.offsets);
  } else {
    throw Error("gen: unknown family '" + opt.family + "'");
  }
  std::ostringstream text;
  text << "c family " << opt.family;
  if (opt.family == "two-clique") text << " a=" << opt.a;
  text << "\n" << write_graph(g);
  emit(text.str(), opt.out);
  if (!opt.units_out.empty()) {
    if (opt.family != "two-clique")
      throw Error("gen: --units is only available for the two-clique family");
    write_file(opt.units_out, units_to_json(gen_two_clique_units(opt.a)));
  }
  return kOk;
}

struct ReduceOptions {
  std::string graph_path;
  std::string out;
  std::string toy;
  std::int64_t threshold_x = -1;
};

int run_reduce(const ReduceOptions& opt) {
  Graph g = load_graph(opt.graph_path, true);
  ParamReport params;
  if (opt.toy.empty()) {
    params = params_for(g.n);
  } else {
    std::int64_t v[4];
    char comma;
    std::istringstream ss(opt.toy);
    if (!(ss >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3]))
      throw Error("reduce: --toy expects q,p,qe,pe");
    params = params_override(g.n, v[0], v[1], v[2], v[3]);
  }
  IntervalInstance inst = reduce(g, params.params);
  write_file(opt.out, instance_to_json(inst));

  Json report;
  report["command"] = "reduce";
  report["graph"] = opt.graph_path;
  report["out"] = opt.out;
  report["interval_count"] = inst.total_intervals().str();
  report["link_count"] = inst.links.size();
  report["params"] = Json::parse(params_to_json(params));
  if (opt.threshold_x >= 0) {
    CanonicalConstantReport cc = canonical_constant(g, params.params, inst);
    DecisionDoc dec;
    dec.x = opt.threshold_x;
    dec.s0 = cc.s0;
    dec.operative_threshold =
        cc.s0 + Big(2) * Big(opt.threshold_x) * Big(params.params.qe);
    dec.formula_value = threshold_formula(params.params, opt.threshold_x).total();
    report["decision"] = Json::parse(decision_to_json(dec));
    report["canonical_constant"] = Json::parse(canonical_constant_to_json(cc));
  }
  std::cout << report.dump(2) << "\n";
  return kOk;
}

int run_validate(const std::string& instance_path) {
  IntervalInstance inst = instance_from_json(read_file(instance_path));
  ValidationReport rep = validate_instance(inst);
  std::cout << validation_to_json(rep);
  if (!rep.all_pass) {
    for (const auto& p : rep.predicates)
      if (!p.pass) std::cerr << "validate: predicate " << p.id << " (" << p.name << ") failed: "
                             << p.detail << "\n";
    return kCheckFailed;
  }
  return kOk;
}

struct CertifyOptions {
  std::string graph_path;
  std::string instance_path;
  std::string cut_path;
  bool use_all_cuts = false;
  bool use_maxcut = false;
  std::string partition_out;
};

int run_certify(const CertifyOptions& opt) {
  Graph g = load_graph(opt.graph_path, true);
  IntervalInstance inst = instance_from_json(read_file(opt.instance_path));
  std::vector<VertexCut> cuts;
  if (opt.use_all_cuts) {
    cuts = all_cuts(g);
  } else if (opt.use_maxcut) {
    cuts.push_back(brute_force_maxcut(g).witness);
  } else if (!opt.cut_path.empty()) {
    cuts.push_back(cut_from_json(read_file(opt.cut_path)));
  } else {
    throw Error("certify: pass one of --cut FILE, --all-cuts, --maxcut");
  }
  auto certs = certify_cuts(g, inst.params, inst, cuts);
  std::cout << certificates_to_json(certs);
  if (!opt.partition_out.empty()) {
    if (cuts.size() != 1)
      throw Error("certify: --partition-out needs a single cut (--cut or --maxcut)");
    GroupPartition part =
        forward_partition(g, inst.params, inst, cuts.front()).as_group_partition(inst);
    write_file(opt.partition_out, partition_to_json(part));
  }
  bool all_zero = true;
  for (const auto& c : certs)
    if (!c.residual.is_zero()) all_zero = false;
  if (!all_zero) {
    std::cerr << "certify: affine residuals are nonzero (canonical value = S0 + 2xq' + "
                 "link-crossing term)\n";
    return kCheckFailed;
  }
  return kOk;
}

int run_audit(const std::string& instance_path, const std::string& partition_path) {
  IntervalInstance inst = instance_from_json(read_file(instance_path));
  GroupPartition part = partition_from_json(read_file(partition_path));
  AuditReport rep = audit_moves(inst, part);
  std::cout << audit_to_json(rep);
  if (!rep.clean()) {
    std::cerr << "audit: " << rep.moves.size() << " structure violation(s) with improving moves\n";
    return kCheckFailed;
  }
  return kOk;
}

struct SolveOptions {
  std::string method;
  std::string input_kind;
  std::string path;
  std::string partition_path;
  bool refresh = false;
};

int run_solve(const SolveOptions& opt) {
  SolverResultDoc doc;
  doc.method = opt.method;
  GroupPartition part_out;
  if (opt.method == "brute") {
    if (opt.input_kind == "graph") {
      Graph g = load_graph(opt.path, false);
      MaxCutResult r = brute_force_maxcut(g);
      doc.cut_size = Big(r.size);
      for (auto s : r.witness.side) doc.sides.push_back(s ? Side::B : Side::A);
      doc.metadata.push_back({"enumerated", std::to_string(r.enumerated)});
    } else {
      std::vector<Interval> ivs;
      if (opt.input_kind == "units") {
        UnitIntervalSet u = units_from_json(read_file(opt.path));
        ivs.resize(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) ivs[u.original_index[k]] = u.sorted[k];
      } else if (opt.input_kind == "instance") {
        IntervalInstance inst = instance_from_json(read_file(opt.path));
        for (const auto& mi : materialize(inst)) ivs.push_back(mi.iv);
      } else {
        throw Error("solve: unknown input kind '" + opt.input_kind + "'");
      }
      IntervalMaxCut r = brute_force_maxcut_intervals(ivs);
      doc.cut_size = r.size;
      doc.sides = r.sides;
      doc.metadata.push_back({"enumerated", std::to_string(r.enumerated)});
    }
  } else if (opt.method == "greedy") {
    if (opt.input_kind != "units")
      throw Error("solve: the greedy method requires --input units");
    UnitIntervalSet u = units_from_json(read_file(opt.path));
    GreedyResult r = greedy_unit_interval(u, GreedyOptions{opt.refresh});
    doc.cut_size = r.cut;
    doc.sides = r.sides;
    doc.metadata.push_back({"phases", std::to_string(r.phases)});
  } else if (opt.method == "local") {
    if (opt.input_kind == "units") {
      UnitIntervalSet u = units_from_json(read_file(opt.path));
      std::vector<Interval> ivs(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) ivs[u.original_index[k]] = u.sorted[k];
      std::vector<Side> sides(ivs.size(), Side::A);
      LocalSearchResult r = local_search_flip(ivs, sides);
      doc.cut_size = r.cut;
      doc.sides = sides;
      doc.metadata.push_back({"flips", std::to_string(r.flips)});
    } else if (opt.input_kind == "instance") {
      IntervalInstance inst = instance_from_json(read_file(opt.path));
      GroupPartition part = opt.partition_path.empty()
                                ? GroupPartition::all_on(inst, Side::A)
                                : partition_from_json(read_file(opt.partition_path));
      LocalSearchResult r = local_search_flip(inst, part);
      part_out = part;
      doc.cut_size = r.cut;
      doc.partition = &part_out;
      doc.metadata.push_back({"flips", std::to_string(r.flips)});
    } else {
      throw Error("solve: the local method requires --input instance or --input units");
    }
  } else {
    throw Error("solve: unknown method '" + opt.method + "'");
  }
  std::cout << solver_result_to_json(doc);
  return kOk;
}

int run_extract(const std::string& graph_path, const std::string& instance_path,
                const std::string& partition_path) {
  Graph g = load_graph(graph_path, true);
  IntervalInstance inst = instance_from_json(read_file(instance_path));
  GroupPartition part = partition_from_json(read_file(partition_path));
  try {
    VertexCut cut = extract_cut(g, inst, part);
    std::cout << cut_to_json(cut);
  } catch (const Error& e) {
    std::cerr << "extract: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval Max Cut reduction and certification workbench"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a named graph");
  gen->add_option("--family", gen_opt.family, "k4|prism|petersen|two-clique|circulant")
      ->required();
  gen->add_option("--a", gen_opt.a, "two-clique size parameter");
  gen->add_option("--n", gen_opt.n, "circulant vertex count");
  gen->add_option("--offsets", gen_opt.offsets, "circulant offsets")->delimiter(',');
  gen->add_option("--out", gen_opt.out, "output graph file (stdout when absent)");
  gen->add_option("--units", gen_opt.units_out, "also write the unit interval representation");

  ReduceOptions red_opt;
  CLI::App* red = app.add_subcommand("reduce", "compile a cubic graph to an interval instance");
  red->add_option("--graph", red_opt.graph_path, "input graph file")->required();
  red->add_option("--out", red_opt.out, "output instance file")->required();
  red->add_option("--toy", red_opt.toy, "override parameters q,p,qe,pe (test mode)");
  red->add_option("--threshold", red_opt.threshold_x,
                  "emit the decision record for cut size X");

  std::string val_instance;
  CLI::App* val = app.add_subcommand("validate", "check the structural predicates");
  val->add_option("--instance", val_instance, "instance file")->required();

  CertifyOptions cert_opt;
  CLI::App* cert = app.add_subcommand("certify", "evaluate canonical partitions of graph cuts");
  cert->add_option("--graph", cert_opt.graph_path, "graph file")->required();
  cert->add_option("--instance", cert_opt.instance_path, "instance file")->required();
  cert->add_option("--cut", cert_opt.cut_path, "cut file");
  cert->add_flag("--all-cuts", cert_opt.use_all_cuts, "certify every bipartition");
  cert->add_flag("--maxcut", cert_opt.use_maxcut, "certify a maximum cut found by enumeration");
  cert->add_option("--partition-out", cert_opt.partition_out,
                   "write the induced canonical partition (single-cut modes)");

  std::string audit_instance, audit_partition;
  CLI::App* aud = app.add_subcommand("audit", "scan a partition for improving structure moves");
  aud->add_option("--instance", audit_instance, "instance file")->required();
  aud->add_option("--partition", audit_partition, "partition file")->required();

  SolveOptions solve_opt;
  CLI::App* sol = app.add_subcommand("solve", "run a Max Cut solver");
  sol->add_option("--method", solve_opt.method, "brute|greedy|local")->required();
  sol->add_option("--input", solve_opt.input_kind, "graph|instance|units")->required();
  sol->add_option("file", solve_opt.path, "input file")->required();
  sol->add_option("--partition", solve_opt.partition_path, "start partition (local on instances)");
  sol->add_flag("--refresh-candidates", solve_opt.refresh,
                "greedy: recompute the candidate set within each phase");

  std::string ext_graph, ext_instance, ext_partition;
  CLI::App* ext = app.add_subcommand("extract", "read the graph cut off a canonical partition");
  ext->add_option("--graph", ext_graph, "graph file")->required();
  ext->add_option("--instance", ext_instance, "instance file")->required();
  ext->add_option("--partition", ext_partition, "partition file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (red->parsed()) return run_reduce(red_opt);
    if (val->parsed()) return run_validate(val_instance);
    if (cert->parsed()) return run_certify(cert_opt);
    if (aud->parsed()) return run_audit(audit_instance, audit_partition);
    if (sol->parsed()) return run_solve(solve_opt);
    if (ext->parsed()) return run_extract(ext_graph, ext_instance, ext_partition);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
