#include "qwzeta/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace qwz {

Graph::Graph(int n, std::vector<std::pair<int, int>> e)
    : vertex_count(n), edges(std::move(e)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
}

ArcTable build_arc_table(const Graph& g) {
  ArcTable t;
  t.arc_count = 2 * g.edge_count();
  t.origin.reserve(t.arc_count);
  t.terminus.reserve(t.arc_count);
  t.inverse.reserve(t.arc_count);
  for (const auto& [u, v] : g.edges) {
    t.origin.push_back(u);
    t.terminus.push_back(v);
    t.origin.push_back(v);
    t.terminus.push_back(u);
  }
  for (int a = 0; a < t.arc_count; ++a) t.inverse.push_back(a ^ 1);
  return t;
}

namespace {

struct AdjEntry {
  int to;
  int edge_id;
};

// Shortest cycle through any vertex, simple graphs only: BFS from every root
// with parent-edge tracking.
int bfs_girth(int n, const std::vector<std::vector<AdjEntry>>& adj) {
  int best = kGirthInfinity;
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    parent_edge[root] = -1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= best) continue;
      for (const auto& [y, eid] : adj[x]) {
        if (eid == parent_edge[x]) continue;
        if (dist[y] >= 0) {
          int len = dist[x] + dist[y] + 1;
          best = std::min(best, len);
        } else {
          dist[y] = dist[x] + 1;
          parent_edge[y] = eid;
          queue.push_back(y);
        }
      }
    }
  }
  return best;
}

}  // namespace

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  const int n = g.vertex_count;
  s.degrees.assign(n, 0);
  bool has_loop = false;
  std::set<std::pair<int, int>> seen;
  bool has_parallel = false;
  for (const auto& [u, v] : g.edges) {
    s.degrees[u] += 1;
    s.degrees[v] += 1;
    if (u == v) has_loop = true;
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) has_parallel = true;
  }
  s.min_degree = n > 0 ? *std::min_element(s.degrees.begin(), s.degrees.end()) : 0;
  s.is_regular = n > 0 && std::all_of(s.degrees.begin(), s.degrees.end(),
                                      [&](int d) { return d == s.degrees[0]; });
  s.regular_degree = s.is_regular ? s.degrees[0] : 0;

  if (has_loop) {
    s.girth = 1;
  } else if (has_parallel) {
    s.girth = 2;
  } else {
    std::vector<std::vector<AdjEntry>> adj(n);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      adj[u].push_back({v, e});
      adj[v].push_back({u, e});
    }
    s.girth = bfs_girth(n, adj);
  }

  // Connectivity by traversal (loops do not help connect anything).
  if (n == 0) {
    s.connected = true;
  } else {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> vis(n, 0);
    std::deque<int> queue{0};
    vis[0] = 1;
    int count = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (!vis[y]) {
          vis[y] = 1;
          ++count;
          queue.push_back(y);
        }
    }
    s.connected = count == n;
  }
  s.betti = s.connected && n > 0 ? g.edge_count() - n + 1 : 0;
  return s;
}

namespace {

Graph from_edge_set(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 1) throw InfeasibleParams("cycle: need n >= 1");
  if (n == 1) return Graph(1, {{0, 0}});
  if (n == 2) return Graph(2, {{0, 1}, {0, 1}});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_edge_set(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InfeasibleParams("complete: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InfeasibleParams("complete_bipartite: need a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return from_edge_set(10, std::move(edges));
}

Graph heawood_graph() {
  // LCF [5,-5]^7 over a 14-cycle.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) edges.push_back({i, (i + 5) % 14});
  return from_edge_set(14, std::move(edges));
}

Graph mcgee_graph() {
  // LCF [12,7,-7]^8 over a 24-cycle.
  std::set<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 24; ++i) edges.push_back({i, (i + 1) % 24});
  auto add_chord = [&](int a, int b) {
    auto key = std::minmax(a, b);
    if (chords.insert({key.first, key.second}).second)
      edges.push_back({key.first, key.second});
  };
  for (int i = 0; i < 24; ++i) {
    int off = i % 3 == 0 ? 12 : (i % 3 == 1 ? 7 : -7);
    add_chord(i, ((i + off) % 24 + 24) % 24);
  }
  return from_edge_set(24, std::move(edges));
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
  if (n < 1) throw InfeasibleParams("circulant: need n >= 1");
  if (offsets.empty()) throw InfeasibleParams("circulant: empty connection set");
  std::set<std::pair<int, int>> edge_set;
  for (int s : offsets) {
    int off = ((s % n) + n) % n;
    if (off == 0) throw InfeasibleParams("circulant: offset is 0 mod n");
    for (int i = 0; i < n; ++i) {
      auto key = std::minmax(i, (i + off) % n);
      edge_set.insert({key.first, key.second});
    }
  }
  return Graph(n, {edge_set.begin(), edge_set.end()});
}

Graph random_regular_graph(int n, int k, int min_girth, std::uint64_t seed,
                           int max_retries) {
  if (n < 1 || k < 1) throw InfeasibleParams("random_regular: need n, k >= 1");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw InfeasibleParams("random_regular: n*k must be even");
  if (k >= n) throw InfeasibleParams("random_regular: need k < n for a simple graph");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < k; ++c) stubs[static_cast<size_t>(v) * k + c] = v;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    // Fisher-Yates with explicit draws so identical seeds reproduce the graph
    // on any platform.
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(rng() % (i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) ok = false;
      auto key = std::minmax(u, v);
      if (ok && !pairs.insert({key.first, key.second}).second) ok = false;
    }
    if (!ok) continue;
    Graph g(n, {pairs.begin(), pairs.end()});
    if (compute_stats(g).girth >= min_girth) return g;
  }
  throw RetryLimitExceeded("random_regular: retry cap exhausted for girth >= " +
                           std::to_string(min_girth));
}

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

namespace {

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  try {
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) return false;
    out = static_cast<int>(v);
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    std::istringstream ls(trimmed);
    std::string ta, tb, extra;
    ls >> ta >> tb;
    if (!ls || tb.empty()) throw ParseError(line_no, "expected two integers");
    if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
    int a, b;
    if (!parse_int(ta, a) || !parse_int(tb, b))
      throw ParseError(line_no, "non-integer token");
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "malformed header");
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError(line_no, "endpoint out of range");
    edges.push_back({a, b});
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

bool strongly_connected(const IntMatrix& adjacency) {
  if (!adjacency.square())
    throw std::invalid_argument("strongly_connected: matrix is not square");
  const int n = adjacency.rows();
  if (n <= 1) return true;  // vacuous reachability
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adjacency(i, j) != 0) {
        fwd[i].push_back(j);
        bwd[j].push_back(i);
      }
  auto full_reach = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!vis[y]) {
          vis[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n;
  };
  return full_reach(fwd) && full_reach(bwd);
}

}  // namespace qwz
