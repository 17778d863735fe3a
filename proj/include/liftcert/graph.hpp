#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcert/errors.hpp"

namespace liftcert {

// Undirected multigraph. Vertices are 0..n-1; loops (u==v) and parallel
// edges are allowed. Edge order is stable: edges are addressable by index.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int vertex_count() const { return n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].u == edges[e].v; }

  // Throws DomainError if an endpoint is out of range.
  void check() const;

  std::vector<int> degrees() const;  // loops add 2

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }
};

// Per-vertex incidence lists as (other endpoint, edge index); a loop at u
// appears once as (u, e).
std::vector<std::vector<std::pair<int, int>>> neighbor_lists(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (0-based); "u u" is a
// loop, repeated lines are parallel edges, '#' starts a comment line.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// JSON form {"n":int,"edges":[[u,v],...]}.
Graph parse_graph_json(const std::string& text);
std::string graph_json(const Graph& g);

// Sides 0/1 per vertex when bipartite (every edge crosses); nullopt when a
// loop or an odd cycle is present.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Shortest cycle length: loop = 1, parallel pair = 2; nullopt for forests.
std::optional<int> girth(const Graph& g);

// +1/-1 per edge of a base graph; the canonical encoding of a 2-lift.
struct Signing {
  const Graph* base = nullptr;
  std::vector<int8_t> signs;
};

// Lexicographic signing order: +1 before -1, edge 0 most significant.
// Index 0 is all-(+1); index 2^m - 1 is all-(-1). Requires m <= 63.
std::vector<int8_t> signs_from_index(int m, std::uint64_t index);
std::uint64_t index_from_signs(const std::vector<int8_t>& signs);

inline constexpr std::uint64_t kDefaultSigningCap = std::uint64_t(1) << 24;

// Streams all 2^m signings in lexicographic order. Construction refuses
// (CapExceeded, naming the required cap) when 2^m exceeds the cap.
class SigningEnumerator {
 public:
  explicit SigningEnumerator(const Graph& g, std::uint64_t cap = kDefaultSigningCap);

  std::uint64_t size() const { return total_; }
  Signing at(std::uint64_t index) const;
  std::optional<Signing> next();

 private:
  const Graph* base_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
};

// 2-lift on 2n vertices, (u,i) encoded as u + i*n. Sign +1 on (u,v) emits
// {(u,0),(v,0)},{(u,1),(v,1)}; sign -1 emits the crossed pair. Edge j of the
// base yields lift edges at positions 2j and 2j+1.
Graph apply_lift(const Signing& s);
Graph apply_lift(const Graph& g, const std::vector<int8_t>& signs);

// k-lift on k*n vertices from one permutation of {0..k-1} per edge: edge
// (u,v) with permutation p emits {(u,i),(v,p[i])} for i = 0..k-1. k=2 with
// id/swap permutations reproduces apply_lift bit-for-bit.
Graph k_lift(const Graph& g, const std::vector<std::vector<int>>& perms, int k);

Graph union_double(const Graph& g);  // all-(+1) lift: two disjoint copies
Graph times_k2(const Graph& g);      // all-(-1) lift

Graph disjoint_union(const Graph& g, const Graph& h);

// Categorical product: (u,x) adjacent to (v,y) iff u~v and x~y, with
// multiplicities multiplying; (u,x) encoded as u*h.n + x.
Graph tensor_product(const Graph& g, const Graph& h);

// One loop appended per vertex, after the original edges.
Graph add_loops(const Graph& g);

// Each edge j=(u,v) replaced by a new vertex n+j and edges (u,n+j),(n+j,v)
// at positions 2j, 2j+1. Always bipartite; a loop becomes a parallel pair.
Graph subdivision(const Graph& g);

inline constexpr std::uint64_t kDefaultGirthBoostCap = std::uint64_t(1) << 16;

struct GirthBoostResult {
  std::vector<Graph> sequence;               // G0, G1, ... (G0 = input)
  std::vector<std::optional<int>> girths;    // girth per sequence entry
  bool reached = false;                      // final girth >= target
  bool flagged = false;                      // stopped without reaching target
};

// Repeated 2-lifting toward girth >= target. Each step scans all signings
// when 2^m <= exhaustive_cap (taking the lexicographically smallest signing
// of maximal girth), else samples `budget` seeded signings per round keeping
// the first strict improvement; stops flagged when an exhaustive scan finds
// no strict improvement or `budget` sampling rounds in a row fail to improve.
GirthBoostResult girth_boost(const Graph& g, int target, std::uint64_t budget,
                             std::uint64_t seed,
                             std::uint64_t exhaustive_cap = kDefaultGirthBoostCap);

}  // namespace liftcert
