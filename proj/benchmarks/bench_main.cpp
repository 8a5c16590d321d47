#include <benchmark/benchmark.h>

#include "ivmc/certify.hpp"
#include "ivmc/graph.hpp"
#include "ivmc/reduction.hpp"
#include "ivmc/solvers.hpp"

using namespace ivmc;

namespace {

Graph graph_for(int n) {
  switch (n) {
    case 4: return gen_k4();
    case 6: return gen_prism();
    case 10: return gen_petersen();
    default: return gen_circulant(n, {1, n / 2});
  }
}

void BM_Reduce(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = graph_for(n);
  Params params = params_for(n).params;
  for (auto _ : state) {
    IntervalInstance inst = reduce(g, params);
    benchmark::DoNotOptimize(inst.groups.data());
  }
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(10)->Arg(50);

void BM_Validate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = graph_for(n);
  IntervalInstance inst = reduce(g, params_for(n).params);
  for (auto _ : state) {
    ValidationReport rep = validate_instance(inst);
    benchmark::DoNotOptimize(rep.all_pass);
  }
}
BENCHMARK(BM_Validate)->Arg(4)->Arg(10)->Arg(30);

void BM_EvalCutGrouped(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = graph_for(n);
  Params params = params_for(n).params;
  IntervalInstance inst = reduce(g, params);
  MaxCutResult best = brute_force_maxcut(g);
  GroupPartition part = forward_partition(g, params, inst, best.witness).as_group_partition(inst);
  for (auto _ : state) {
    Big v = eval_cut_grouped(inst, part);
    benchmark::DoNotOptimize(&v);
  }
}
BENCHMARK(BM_EvalCutGrouped)->Arg(4)->Arg(10);

void BM_FlipDelta(benchmark::State& state) {
  Graph g = gen_petersen();
  Params params = params_for(10).params;
  IntervalInstance inst = reduce(g, params);
  GroupPartition part =
      forward_partition(g, params, inst, VertexCut::from_string("CDCDCDCDCD"))
          .as_group_partition(inst);
  FlipTarget t{FlipTarget::Kind::GroupMember, 1, Side::A};
  if (part.in_a[1] == 0) t.from = Side::B;
  for (auto _ : state) {
    Big d = flip_delta(inst, part, t);
    benchmark::DoNotOptimize(&d);
  }
}
BENCHMARK(BM_FlipDelta);

void BM_CountEdges(benchmark::State& state) {
  IntervalInstance inst = reduce(gen_k4(), params_for(4).params);
  for (auto _ : state) {
    Big e = count_edges(inst);
    benchmark::DoNotOptimize(&e);
  }
}
BENCHMARK(BM_CountEdges);

void BM_BruteForceToyGadget(benchmark::State& state) {
  Params toy{4, 3, 7, 2, 5};
  GadgetBuild b = build_gadget(true, toy, 0, 0, 0);
  IntervalInstance inst;
  inst.params = Params{1, 3, 7, 0, 0};
  inst.groups.assign(b.groups.begin(), b.groups.end());
  std::vector<Interval> ivs;
  for (const auto& mi : materialize(inst)) ivs.push_back(mi.iv);
  for (auto _ : state) {
    IntervalMaxCut r = brute_force_maxcut_intervals(ivs);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_BruteForceToyGadget)->Unit(benchmark::kMillisecond);

void BM_GreedyTwoClique(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  UnitIntervalSet u = gen_two_clique_units(a);
  for (auto _ : state) {
    GreedyResult r = greedy_unit_interval(u);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_GreedyTwoClique)->Arg(5)->Arg(25)->Arg(100);

void BM_AuditPerturbed(benchmark::State& state) {
  Graph g = gen_k4();
  Params params = params_for(4).params;
  IntervalInstance inst = reduce(g, params);
  GroupPartition canon =
      forward_partition(g, params, inst, VertexCut::from_string("CCDD")).as_group_partition(inst);
  for (auto _ : state) {
    GroupPartition part = canon;
    part.in_a[1] = inst.groups[1].count / 2;
    AuditReport rep = audit_moves(inst, part);
    benchmark::DoNotOptimize(&rep);
  }
}
BENCHMARK(BM_AuditPerturbed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
