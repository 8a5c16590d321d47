#include "ivmc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace ivmc {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void Graph::validate() const {
  if (n <= 0) throw Error("graph: vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("graph: edge endpoint out of range");
    if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u + 1));
    if (u > v) throw Error("graph: edge stored with larger endpoint first");
    if (!seen.insert({u, v}).second)
      throw Error("graph: duplicate edge (" + std::to_string(u + 1) + "," +
                  std::to_string(v + 1) + ")");
  }
  if (!cubic) return;
  if (n % 2 != 0) throw Error("graph: cubic graph needs even n, got n = " + std::to_string(n));
  if (n < 4) throw Error("graph: cubic graph needs n >= 4");
  auto deg = degrees();
  for (int v = 0; v < n; ++v) {
    if (deg[v] != 3)
      throw Error("graph: degree(" + std::to_string(v + 1) + ") = " +
                  std::to_string(deg[v]) + " != 3");
  }
}

VertexCut VertexCut::from_string(const std::string& cd) {
  VertexCut cut;
  cut.side.reserve(cd.size());
  for (char c : cd) {
    if (c == 'C')
      cut.side.push_back(0);
    else if (c == 'D')
      cut.side.push_back(1);
    else
      throw Error("cut: expected 'C' or 'D', got '" + std::string(1, c) + "'");
  }
  return cut;
}

VertexCut VertexCut::complement() const {
  VertexCut out;
  out.side.reserve(side.size());
  for (auto s : side) out.side.push_back(s ? 0 : 1);
  return out;
}

std::string VertexCut::str() const {
  std::string s;
  s.reserve(side.size());
  for (auto b : side) s.push_back(b ? 'D' : 'C');
  return s;
}

long long VertexCut::count_c() const {
  long long c = 0;
  for (auto b : side)
    if (!b) ++c;
  return c;
}

namespace {

Graph parse_impl(const std::string& text, bool require_cubic) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long declared_m = -1;
  bool have_header = false;
  auto fail = [&](const std::string& msg) {
    throw Error("graph file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate problem line");
      std::string fmt;
      long long n = 0, m = 0;
      if (!(ls >> fmt >> n >> m) || fmt != "edge") fail("malformed problem line, expected 'p edge <n> <m>'");
      if (n <= 0 || n > 1'000'000) fail("vertex count out of range");
      if (m < 0) fail("negative edge count");
      g.n = static_cast<int>(n);
      declared_m = m;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) fail("edge before problem line");
      long long i = 0, j = 0;
      std::string extra;
      if (!(ls >> i >> j) || (ls >> extra)) fail("malformed edge line, expected 'e <i> <j>'");
      if (i < 1 || j < 1 || i > g.n || j > g.n) fail("edge endpoint out of range");
      if (i == j) fail("self-loop at vertex " + std::to_string(i));
      if (i > j) std::swap(i, j);
      g.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
      continue;
    }
    fail("unknown line tag '" + tag + "'");
  }
  if (!have_header) throw Error("graph file: missing 'p edge <n> <m>' header");
  if (declared_m != static_cast<long long>(g.edges.size()))
    throw Error("graph file: header declares " + std::to_string(declared_m) + " edges, found " +
                std::to_string(g.edges.size()));
  g.cubic = require_cubic;
  g.validate();
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text) { return parse_impl(text, true); }
Graph parse_graph_any(const std::string& text) { return parse_impl(text, false); }

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph gen_k4() {
  Graph g;
  g.n = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.edges.emplace_back(i, j);
  g.validate();
  return g;
}

Graph gen_prism() {
  Graph g;
  g.n = 6;
  g.edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

Graph gen_petersen() {
  Graph g;
  g.n = 10;
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);            // outer cycle
    g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);    // inner pentagram
    g.edges.emplace_back(i, 5 + i);                  // spokes
  }
  for (auto& [u, v] : g.edges)
    if (u > v) std::swap(u, v);
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

Graph gen_circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw Error("circulant: n must be >= 3");
  Graph g;
  g.n = n;
  std::set<int> seen_offsets;
  std::set<std::pair<int, int>> edges;
  for (int off : offsets) {
    if (off <= 0 || off > n / 2) throw Error("circulant: offset must lie in [1, n/2]");
    if (!seen_offsets.insert(off).second)
      throw Error("circulant: offset " + std::to_string(off) + " repeated");
    // The half offset n/2 generates each of its edges from both endpoints;
    // distinct offsets in [1, n/2] can never produce the same edge.
    for (int v = 0; v < n; ++v) {
      int u = (v + off) % n;
      edges.insert({std::min(v, u), std::max(v, u)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  try {
    g.validate();
  } catch (const Error& e) {
    throw Error(std::string("circulant: offsets do not yield a simple cubic graph: ") + e.what());
  }
  return g;
}

Graph gen_two_clique(int a) {
  if (a < 1) throw Error("two-clique: parameter a must be >= 1");
  Graph g;
  g.cubic = false;
  g.n = 8 * a;
  // Cliques on 1..6a and 2a+1..8a (0-based: [0,6a) and [2a,8a)).
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (j < 6 * a || i >= 2 * a) g.edges.emplace_back(i, j);
  g.validate();
  return g;
}

long long eval_cut_graph(const Graph& g, const VertexCut& cut) {
  if (static_cast<int>(cut.size()) != g.n)
    throw Error("eval_cut_graph: cut has " + std::to_string(cut.size()) + " labels, graph has " +
                std::to_string(g.n) + " vertices");
  long long c = 0;
  for (auto [u, v] : g.edges) c += cut.side[u] != cut.side[v];
  return c;
}

namespace {

int enumeration_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned t = hw == 0 ? 1 : hw;
  if (const char* env = std::getenv("MAXCUT_IV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw Error("MAXCUT_IV_THREADS must be a positive integer");
    t = static_cast<unsigned>(v);
  }
  return static_cast<int>(t);
}

// side mask bit v = 1 means vertex v is in D. Vertex 0 always C (bit 0 = 0).
long long cut_of_mask(const std::vector<std::uint32_t>& adj, int n, std::uint32_t dmask) {
  long long c = 0;
  for (int v = 0; v < n; ++v)
    if (!((dmask >> v) & 1u)) c += std::popcount(adj[v] & dmask);
  return c;
}

VertexCut cut_from_mask(int n, std::uint32_t dmask) {
  VertexCut cut;
  cut.side.resize(n);
  for (int v = 0; v < n; ++v) cut.side[v] = (dmask >> v) & 1u;
  return cut;
}

bool lex_less(const VertexCut& a, const VertexCut& b) { return a.side < b.side; }

}  // namespace

MaxCutResult brute_force_maxcut(const Graph& g) {
  g.validate();
  if (g.n > 26)
    throw Error("brute_force_maxcut: n = " + std::to_string(g.n) +
                " exceeds the enumeration bound 26");
  std::vector<std::uint32_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint64_t total = 1ull << (g.n - 1);
  const int nthreads = std::min<std::uint64_t>(enumeration_threads(), total);

  struct Local {
    long long best = -1;
    std::uint32_t best_mask = 0;
  };
  std::vector<Local> locals(nthreads);
  auto worker = [&](int t) {
    std::uint64_t lo = total * t / nthreads;
    std::uint64_t hi = total * (t + 1) / nthreads;
    Local loc;
    for (std::uint64_t m = lo; m < hi; ++m) {
      std::uint32_t dmask = static_cast<std::uint32_t>(m) << 1;
      long long c = cut_of_mask(adj, g.n, dmask);
      if (c > loc.best) {
        loc.best = c;
        loc.best_mask = dmask;
      } else if (c == loc.best &&
                 lex_less(cut_from_mask(g.n, dmask), cut_from_mask(g.n, loc.best_mask))) {
        loc.best_mask = dmask;
      }
    }
    locals[t] = loc;
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Local best = locals[0];
  for (int t = 1; t < nthreads; ++t) {
    if (locals[t].best > best.best ||
        (locals[t].best == best.best &&
         lex_less(cut_from_mask(g.n, locals[t].best_mask), cut_from_mask(g.n, best.best_mask))))
      best = locals[t];
  }
  return MaxCutResult{best.best, cut_from_mask(g.n, best.best_mask), total};
}

std::vector<VertexCut> all_cuts(const Graph& g) {
  if (g.n > 20) throw Error("all_cuts: n = " + std::to_string(g.n) + " exceeds bound 20");
  std::vector<VertexCut> cuts;
  cuts.reserve(1ull << (g.n - 1));
  for (std::uint64_t m = 0; m < (1ull << (g.n - 1)); ++m)
    cuts.push_back(cut_from_mask(g.n, static_cast<std::uint32_t>(m) << 1));
  return cuts;
}

}  // namespace ivmc
