#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ivmc/error.hpp"

namespace ivmc {

/// Simple undirected graph. Vertices are 0-based internally and 1-based in
/// files and reports. Every edge is stored with the smaller endpoint first,
/// in insertion order; that order is the edge order e_1..e_m used downstream.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  // Generators for non-cubic families (two-clique) set this to false; the
  // cubic invariant is then not enforced.
  bool cubic = true;

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;

  /// Checks simplicity (no loops, no duplicates, endpoints in range) and,
  /// when `cubic` is set, 3-regularity with even n >= 4. Throws Error.
  void validate() const;
};

/// Bipartition of graph vertices into classes C and D.
/// side[v] == 0 means C, 1 means D.
struct VertexCut {
  std::vector<std::uint8_t> side;

  VertexCut() = default;
  explicit VertexCut(std::vector<std::uint8_t> s) : side(std::move(s)) {}
  static VertexCut from_string(const std::string& cd);  // e.g. "CDDC"

  std::size_t size() const { return side.size(); }
  VertexCut complement() const;
  std::string str() const;  // "CDDC..."
  long long count_c() const;

  bool operator==(const VertexCut&) const = default;
};

/// Parses the line-oriented graph file format:
///   c <comment>
///   p edge <n> <m>
///   e <i> <j>        (1 <= i, j <= n; normalized to smaller-first)
/// Enforces the cubic invariants (degree 3, even n >= 4).
Graph parse_graph(const std::string& text);

/// Same format, but only simplicity is enforced. Used for general graphs
/// such as the two-clique family.
Graph parse_graph_any(const std::string& text);

std::string write_graph(const Graph& g);

Graph gen_k4();
Graph gen_prism();
Graph gen_petersen();
/// Circulant graph C_n(offsets). Throws unless the result is simple and
/// 3-regular (e.g. offsets {1, n/2} for even n >= 6, or {1, 2} for n = 4).
Graph gen_circulant(int n, const std::vector<int>& offsets);
/// 8a vertices; 1..6a pairwise adjacent and 2a+1..8a pairwise adjacent.
/// Not cubic: edge count 2*C(6a,2) - C(4a,2).
Graph gen_two_clique(int a);

/// Number of edges with endpoints in different classes.
long long eval_cut_graph(const Graph& g, const VertexCut& cut);

struct MaxCutResult {
  long long size = 0;
  VertexCut witness;            // lexicographically smallest optimum, vertex 1 in C
  std::uint64_t enumerated = 0; // bipartitions inspected
};

/// Exact maximum cut by enumeration of 2^(n-1) bipartitions (vertex 1
/// pinned to C). Refuses n > 26. Deterministic regardless of the number of
/// worker threads (capped by MAXCUT_IV_THREADS).
MaxCutResult brute_force_maxcut(const Graph& g);

/// All 2^(n-1) cuts with vertex 1 in C, in mask order. n <= 20 guard.
std::vector<VertexCut> all_cuts(const Graph& g);

}  // namespace ivmc
