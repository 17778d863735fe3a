#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liftcert/graph.hpp"
#include "liftcert/model.hpp"
#include "liftcert/scalar.hpp"

namespace liftcert {

struct PartitionCaps {
  std::uint64_t assignments = 100000000;  // q^v refusal threshold
  std::uint64_t expansions = 10000000;    // deletion-contraction node budget
};

// Z(G,A,nu) = sum over colorings phi of prod_u nu(phi(u)) * prod_{(u,v)}
// A(phi(u),phi(v)); loops contribute A(phi(u),phi(u)), parallel edges
// multiply. Exact for exact models, float otherwise. Prunes zero partial
// products (sound: entries are nonnegative) and parallelizes over color
// prefixes with a merge in prefix order, so float results are deterministic.
Scalar partition_value(const Graph& g, const SpinModel& m, const PartitionCaps& caps = {});

// hom(G,H): partition value against the 0/1 adjacency of H, unit weights.
Scalar hom_count(const Graph& g, const Graph& h, const PartitionCaps& caps = {});

// trace(A^n) by repeated matrix multiplication; equals Z(C_n, m) when nu is
// all-ones (independent oracle for cycle homomorphism counts).
Scalar hom_cycle_oracle(int n, const SpinModel& m);

// c_0..c_k with trailing zeros trimmed; c_0 = 1 (empty set / empty matching).
using CountVector = std::vector<BigInt>;

// Number of independent sets by size, by literal 2^v subset scan; a looped
// vertex is never independent. Requires v <= 30.
CountVector independent_set_counts(const Graph& g);

// Number of matchings by size, by literal 2^m edge-subset scan; loops are
// never matchable. Requires m <= 30 and v <= 64.
CountVector matching_counts(const Graph& g);

// sum_k c_k x^k; exact when x is exact.
Scalar eval_counts(const CountVector& counts, const Scalar& x);

// Independence polynomial I(G,lambda).
Scalar eval_I(const Graph& g, const Scalar& lambda);

// Random-cluster parameters. The probabilistic interpretation (and every
// theorem suite) wants q >= 1, w >= 0; random_cluster itself evaluates the
// polynomial identity for arbitrary values, which the Tutte conversion needs.
struct RCParams {
  Scalar q;
  Scalar w;
};

// Z(G,q,w) = sum over edge subsets F of q^{k(F)} w^{|F|} by deletion-
// contraction: loops stripped first as (1+w) factors, then split on the
// highest-index non-loop edge.
Scalar random_cluster(const Graph& g, const RCParams& p, const PartitionCaps& caps = {});

// (P(e not in F), P(e in F)) = (Z(G-e)/Z, w*Z(G/e)/Z).
std::pair<Scalar, Scalar> edge_probabilities(const Graph& g, const RCParams& p, int e,
                                             const PartitionCaps& caps = {});

struct FkgReport {
  Scalar lhs;        // Z(G-{e,f}) * Z(G/{e,f})
  Scalar rhs;        // Z((G-e)/f) * Z((G/e)-f)
  bool product_ok;   // lhs >= rhs
  Scalar p_e, p_f;   // P(e in F), P(f in F)
  Scalar p_both;     // P(e in F and f in F)
  bool prob_ok;      // p_e * p_f <= p_both
};

// Positive-correlation check for distinct edges e, f.
FkgReport fkg_check(const Graph& g, const RCParams& p, int e, int f,
                    const PartitionCaps& caps = {});

// T(G,x,y) = (x-1)^{-k(G)} (y-1)^{-v(G)} Z(G,(x-1)(y-1),y-1); x,y != 1.
Scalar tutte_eval(const Graph& g, const Scalar& x, const Scalar& y,
                  const PartitionCaps& caps = {});

Graph delete_edge(const Graph& g, int e);
// Merges the higher endpoint into the lower and drops edge e; edges parallel
// to e become loops. Contracting a loop is deletion.
Graph contract_edge(const Graph& g, int e);

}  // namespace liftcert
