#pragma once

#include <cstdint>

#include "liftcert/graph.hpp"
#include "liftcert/model.hpp"
#include "liftcert/partition.hpp"
#include "liftcert/scalar.hpp"

namespace liftcert {

// Serial, unpruned oracles kept deliberately naive: they re-derive the same
// quantities as the production engines by the most literal definition, for
// equivalence tests and benchmarks.

// Z(G,A,nu) by a straight q^v odometer walk, every factor multiplied, no
// pruning, no parallelism.
Scalar z_enumeration(const Graph& g, const SpinModel& m, std::uint64_t cap = 10000000);

// Z(G,q,w) = sum over all 2^m edge subsets of q^{k(F)} w^{|F|}, components
// by union-find. Requires m <= max_edges.
Scalar random_cluster_subsets(const Graph& g, const RCParams& p, int max_edges = 20);

// Checks k(F) >= v(G) - |F| over every edge subset. Requires m <= max_edges.
bool subset_component_bound_holds(const Graph& g, int max_edges = 20);

}  // namespace liftcert
