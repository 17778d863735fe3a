#include "liftcert/catalog.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "liftcert/errors.hpp"

namespace liftcert {

Graph complete_graph(int n) {
  if (n < 1) throw DomainError("complete_graph: n must be positive");
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph: n must be at least 3");
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u) g.edges.push_back({u, (u + 1) % n});
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path_graph: n must be positive");
  Graph g;
  g.n = n;
  for (int u = 0; u + 1 < n; ++u) g.edges.push_back({u, u + 1});
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete_bipartite: sides must be positive");
  Graph g;
  g.n = a + b;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.edges.push_back({u, a + v});
  return g;
}

Graph petersen_graph() {
  Graph g;
  g.n = 10;
  for (int i = 0; i < 5; ++i) g.edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) g.edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) g.edges.push_back({5 + i, 5 + (i + 2) % 5});
  return g;
}

Graph heawood_graph() {
  Graph g;
  g.n = 14;
  for (int i = 0; i < 14; ++i) g.edges.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) {
    int j = (i + 5) % 14;
    g.edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return g;
}

Graph catalog_graph(const std::string& name) {
  auto numbered = [&](char prefix, int lo, int hi) -> int {
    if (name.size() < 2 || name[0] != prefix) return -1;
    int value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      value = value * 10 + (name[i] - '0');
    }
    return (value >= lo && value <= hi) ? value : -1;
  };
  if (name == "petersen") return petersen_graph();
  if (name == "heawood") return heawood_graph();
  if (name == "k22") return complete_bipartite(2, 2);
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "k44") return complete_bipartite(4, 4);
  if (int n = numbered('k', 2, 5); n > 0) return complete_graph(n);
  if (int n = numbered('c', 3, 12); n > 0) return cycle_graph(n);
  if (int n = numbered('p', 2, 8); n > 0) return path_graph(n);
  throw DomainError("catalog_graph: unknown name '" + name + "'");
}

std::vector<NamedGraph> default_catalog() {
  std::vector<NamedGraph> out;
  for (const char* name :
       {"k2", "k3", "k4", "k5", "c3", "c4", "c5", "c6", "c8", "c12", "p3", "p4",
        "k22", "k33", "k44", "petersen", "heawood"}) {
    out.push_back({name, catalog_graph(name)});
  }
  return out;
}

namespace {

bool simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) return false;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

void sort_edges(Graph& g) {
  for (Edge& e : g.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
}

constexpr int kSampleAttempts = 1000;

}  // namespace

Graph random_regular(int n, int d, Rng& rng) {
  if (n < 1 || d < 0) throw DomainError("random_regular: need n >= 1 and d >= 0");
  if (d >= n) throw DomainError("random_regular: need d < n for a simple graph");
  if ((n * d) % 2 != 0) throw DomainError("random_regular: n*d must be even");
  // Configuration model: pair up n*d stubs, reject non-simple outcomes.
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / d;
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(stubs[i - 1], stubs[j]);
    }
    Graph g;
    g.n = n;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) g.edges.push_back({stubs[i], stubs[i + 1]});
    if (!simple(g)) continue;
    sort_edges(g);
    return g;
  }
  throw CapExceeded("random_regular: no simple sample found");
}

Graph random_bipartite_regular(int n, int d, Rng& rng) {
  if (n < 1 || d < 0) throw DomainError("random_bipartite_regular: need n >= 1 and d >= 0");
  if (d > n) throw DomainError("random_bipartite_regular: need d <= n");
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    Graph g;
    g.n = 2 * n;
    for (int round = 0; round < d; ++round) {
      std::vector<int> p = rng.permutation(n);
      for (int i = 0; i < n; ++i) g.edges.push_back({i, n + p[i]});
    }
    if (!simple(g)) continue;
    sort_edges(g);
    return g;
  }
  throw CapExceeded("random_bipartite_regular: no simple sample found");
}

Graph random_multigraph(Rng& rng, int max_n, int max_m) {
  if (max_n < 1 || max_m < 0) throw DomainError("random_multigraph: bad bounds");
  Graph g;
  g.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m) + 1));
  for (int e = 0; e < m; ++e) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)));
    g.edges.push_back({u, v});
  }
  return g;
}

}  // namespace liftcert
