#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ivmc/graph.hpp"

using namespace ivmc;

namespace {

const char* kK4Text =
    "c complete graph on 4 vertices\n"
    "p edge 4 6\n"
    "e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

}  // namespace

TEST_CASE("parse K4") {
  Graph g = parse_graph(kK4Text);
  CHECK(g.n == 4);
  CHECK(g.m() == 6);
  CHECK(g.edges.front() == std::pair<int, int>{0, 1});
  CHECK(g.cubic);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_graph("p edge 4 1\ne 1 1\n"), doctest::Contains("self-loop"),
                       Error);
  // K4 with one edge missing: degree 2 at two vertices.
  CHECK_THROWS_WITH_AS(parse_graph("p edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n"),
                       doctest::Contains("!= 3"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("p edge 4 7\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 2 1\n"),
                       doctest::Contains("duplicate"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"),
                       doctest::Contains("even"), Error);
  CHECK_THROWS_AS(parse_graph("p edge 4 6\ne 1\n"), Error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph("p edge 4 6\nq 1 2\n"), Error);
}

TEST_CASE("edge normalization and writer round trip") {
  Graph g = parse_graph("p edge 4 6\ne 2 1\ne 3 1\ne 4 1\ne 3 2\ne 4 2\ne 4 3\n");
  CHECK(g.edges.front() == std::pair<int, int>{0, 1});
  Graph again = parse_graph(write_graph(g));
  CHECK(again.edges == g.edges);
}

TEST_CASE("named generators") {
  CHECK(gen_k4().n == 4);
  CHECK(gen_k4().m() == 6);
  Graph prism = gen_prism();
  CHECK(prism.n == 6);
  CHECK(prism.m() == 9);
  Graph pet = gen_petersen();
  CHECK(pet.n == 10);
  CHECK(pet.m() == 15);
  for (int d : pet.degrees()) CHECK(d == 3);

  Graph tc1 = gen_two_clique(1);
  CHECK(tc1.n == 8);
  CHECK(tc1.m() == 24);  // C(6,2) + C(6,2) - C(4,2)
  CHECK(!tc1.cubic);
  Graph tc2 = gen_two_clique(2);
  CHECK(tc2.n == 16);
  CHECK(tc2.m() == 104);  // 2*C(12,2) - C(8,2)

  Graph c4 = gen_circulant(4, {1, 2});
  CHECK(c4.m() == 6);  // K4
  Graph c6 = gen_circulant(6, {1, 3});
  CHECK(c6.m() == 9);
  CHECK_THROWS_AS(gen_circulant(6, {2, 2}), Error);   // duplicate edges
  CHECK_THROWS_AS(gen_circulant(6, {1, 2}), Error);   // degree 4
  CHECK_THROWS_AS(gen_circulant(6, {0}), Error);
}

TEST_CASE("cut evaluation") {
  Graph k4 = gen_k4();
  CHECK(eval_cut_graph(k4, VertexCut::from_string("CCDD")) == 4);
  CHECK(eval_cut_graph(k4, VertexCut::from_string("CDDD")) == 3);
  CHECK(eval_cut_graph(k4, VertexCut::from_string("CCCC")) == 0);
  CHECK_THROWS_AS(eval_cut_graph(k4, VertexCut::from_string("CC")), Error);
  // Two-clique(1): {1,2,7,8} vs the four middle vertices cuts 4*4 edges.
  Graph tc = gen_two_clique(1);
  CHECK(eval_cut_graph(tc, VertexCut::from_string("CCDDDDCC")) == 16);
}

TEST_CASE("cut value is complement invariant") {
  std::mt19937 rng(7);
  for (const Graph& g : {gen_k4(), gen_prism(), gen_petersen(), gen_two_clique(1)}) {
    for (int it = 0; it < 20; ++it) {
      VertexCut cut;
      for (int v = 0; v < g.n; ++v) cut.side.push_back(rng() & 1);
      CHECK(eval_cut_graph(g, cut) == eval_cut_graph(g, cut.complement()));
    }
  }
}

TEST_CASE("brute force maxima") {
  CHECK(brute_force_maxcut(gen_k4()).size == 4);
  CHECK(brute_force_maxcut(gen_prism()).size == 7);
  CHECK(brute_force_maxcut(gen_petersen()).size == 12);
  CHECK(brute_force_maxcut(gen_two_clique(1)).size == 16);   // 16a^2, a=1
  CHECK(brute_force_maxcut(gen_two_clique(2)).size == 64);   // 16a^2, a=2
}

TEST_CASE("brute force witness is optimal, deterministic, lexicographically least") {
  MaxCutResult r = brute_force_maxcut(gen_k4());
  CHECK(eval_cut_graph(gen_k4(), r.witness) == r.size);
  CHECK(r.witness.str() == "CCDD");
  CHECK(r.enumerated == 8);
  for (const Graph& g : {gen_prism(), gen_petersen()}) {
    MaxCutResult a = brute_force_maxcut(g);
    CHECK(eval_cut_graph(g, a.witness) == a.size);
    MaxCutResult b = brute_force_maxcut(g);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("brute force is thread-count independent") {
  setenv("MAXCUT_IV_THREADS", "3", 1);
  MaxCutResult three = brute_force_maxcut(gen_petersen());
  setenv("MAXCUT_IV_THREADS", "1", 1);
  MaxCutResult one = brute_force_maxcut(gen_petersen());
  unsetenv("MAXCUT_IV_THREADS");
  CHECK(three.size == one.size);
  CHECK(three.witness == one.witness);
}

TEST_CASE("thread cap rejects garbage values") {
  setenv("MAXCUT_IV_THREADS", "zero", 1);
  CHECK_THROWS_WITH_AS(brute_force_maxcut(gen_k4()), doctest::Contains("MAXCUT_IV_THREADS"),
                       Error);
  setenv("MAXCUT_IV_THREADS", "0", 1);
  CHECK_THROWS_AS(brute_force_maxcut(gen_k4()), Error);
  unsetenv("MAXCUT_IV_THREADS");
}

TEST_CASE("brute force bound") {
  Graph big = gen_two_clique(4);  // 32 vertices
  CHECK_THROWS_WITH_AS(brute_force_maxcut(big), doctest::Contains("bound 26"), Error);
}

TEST_CASE("random cut bound: maximum is at least m/2") {
  for (const Graph& g : {gen_k4(), gen_prism(), gen_petersen(), gen_two_clique(1),
                         gen_circulant(8, {1, 4})}) {
    CHECK(brute_force_maxcut(g).size * 2 >= g.m());
  }
}

TEST_CASE("all_cuts enumerates with vertex 1 pinned") {
  Graph k4 = gen_k4();
  auto cuts = all_cuts(k4);
  CHECK(cuts.size() == 8);
  CHECK(cuts.front().str() == "CCCC");
  for (const auto& c : cuts) CHECK(c.side[0] == 0);
}
