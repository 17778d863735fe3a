#pragma once
// Named fixture graphs and seeded random generators used by the
// verification suites and the CLI.

#include <string>
#include <vector>

#include "liftcert/graph.hpp"
#include "liftcert/rng.hpp"

namespace liftcert {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);  // n vertices, n-1 edges
Graph complete_bipartite(int a, int b);
Graph petersen_graph();   // outer 5-cycle, spokes, inner pentagram
Graph heawood_graph();    // 14-cycle plus chords (i, i+5) for even i

// Lookup by name: k2..k5, c3..c12, p2..p8, k22, k33, k44, petersen,
// heawood. Unknown names throw DomainError.
Graph catalog_graph(const std::string& name);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// The standard fixture list, in a fixed report order.
std::vector<NamedGraph> default_catalog();

// Configuration-model sample rejected until simple; n*d must be even and
// d < n. Same seed state gives the same edge list.
Graph random_regular(int n, int d, Rng& rng);

// Union of d random perfect matchings between two sides of size n, rejected
// until simple; d <= n.
Graph random_bipartite_regular(int n, int d, Rng& rng);

// Uniform endpoints: loops and parallel edges allowed. 1 <= n <= max_n,
// 0 <= m <= max_m.
Graph random_multigraph(Rng& rng, int max_n, int max_m);

}  // namespace liftcert
