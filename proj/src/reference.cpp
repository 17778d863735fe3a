#include "liftcert/reference.hpp"

#include <numeric>
#include <vector>

namespace liftcert {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Returns true when the union merged two components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Scalar z_enumeration(const Graph& g, const SpinModel& m, std::uint64_t cap) {
  g.check();
  m.check();
  std::uint64_t total = 1;
  for (int u = 0; u < g.n; ++u) {
    if (total > cap / static_cast<std::uint64_t>(m.q))
      throw CapExceeded("z_enumeration: " + std::to_string(m.q) + "^" + std::to_string(g.n) +
                        " assignments exceed cap " + std::to_string(cap));
    total *= static_cast<std::uint64_t>(m.q);
  }
  Scalar zero = m.is_exact() ? Scalar(0) : Scalar::real(0.0);
  Scalar sum = zero;
  std::vector<int> color(g.n, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    Scalar term = m.is_exact() ? Scalar(1) : Scalar::real(1.0);
    for (int u = 0; u < g.n; ++u) term *= m.nu[color[u]];
    for (const Edge& e : g.edges) term *= m.A(color[e.u], color[e.v]);
    sum += term;
    for (int u = g.n - 1; u >= 0; --u) {  // odometer increment
      if (++color[u] < m.q) break;
      color[u] = 0;
    }
  }
  return sum;
}

Scalar random_cluster_subsets(const Graph& g, const RCParams& p, int max_edges) {
  g.check();
  const int m = g.edge_count();
  if (m > max_edges)
    throw CapExceeded("random_cluster_subsets: m <= " + std::to_string(max_edges) + " required");
  if (p.q.is_exact() != p.w.is_exact())
    throw DomainError("random_cluster_subsets: q and w must share a tag");
  Scalar one = p.q.is_exact() ? Scalar(1) : Scalar::real(1.0);
  std::vector<Scalar> q_pow(g.n + 1, one), w_pow(m + 1, one);
  for (int i = 1; i <= g.n; ++i) q_pow[i] = q_pow[i - 1] * p.q;
  for (int i = 1; i <= m; ++i) w_pow[i] = w_pow[i - 1] * p.w;
  Scalar sum = p.q.is_exact() ? Scalar(0) : Scalar::real(0.0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    UnionFind uf(g.n);
    int comps = g.n, size = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ++size;
        if (uf.unite(g.edges[e].u, g.edges[e].v)) --comps;
      }
    sum += q_pow[comps] * w_pow[size];
  }
  return sum;
}

bool subset_component_bound_holds(const Graph& g, int max_edges) {
  g.check();
  const int m = g.edge_count();
  if (m > max_edges)
    throw CapExceeded("subset_component_bound_holds: m <= " + std::to_string(max_edges) +
                      " required");
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    UnionFind uf(g.n);
    int comps = g.n, size = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ++size;
        if (uf.unite(g.edges[e].u, g.edges[e].v)) --comps;
      }
    if (comps < g.n - size) return false;
  }
  return true;
}

}  // namespace liftcert
