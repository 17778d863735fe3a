#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liftcert/graph.hpp"
#include "liftcert/scalar.hpp"

namespace liftcert {

// Spin model: symmetric nonnegative q x q matrix A plus positive vertex
// weights nu. Entries are tag-homogeneous: one float entry anywhere makes
// the whole model float (Scalar arithmetic refuses mixed tags).
struct SpinModel {
  int q = 0;
  std::vector<Scalar> a;   // row-major, q*q entries
  std::vector<Scalar> nu;  // length q

  const Scalar& A(int i, int j) const { return a[static_cast<std::size_t>(i) * q + j]; }
  Scalar& A(int i, int j) { return a[static_cast<std::size_t>(i) * q + j]; }

  bool is_exact() const;
  bool zero_one() const;      // every entry is 0 or 1
  bool unit_weights() const;  // every nu(i) is 1

  // Symmetry, entry nonnegativity, nu positivity, tag homogeneity.
  void check() const;
};

// Hard-core / independent-set matrix [[1,1],[1,0]].
SpinModel ind_model();
// Widom-Rowlinson 3x3 matrix [[1,1,0],[1,1,1],[0,1,1]].
SpinModel wr_model();
// Ising: A = [[e^b, e^-b],[e^-b, e^b]], nu = (e^B, e^-B). Always float.
SpinModel ising_model(double beta, double field);
// Potts: all-ones plus w on the diagonal, nu all ones. Requires q >= 1.
SpinModel potts_model(int q, const Scalar& w);

// "ind", "wr", "ising(beta[,field])", "potts(q,w)".
SpinModel named_model(const std::string& spec);

// 0/1-with-multiplicity adjacency matrix of a graph (loops set the diagonal),
// nu all ones. Simple graphs give 0/1 entries.
SpinModel model_from_graph(const Graph& h);

// Blocks of size mult[i] x mult[j] holding A(i,j); nu of the result is
// all-ones. Requires every mult[i] >= 1.
SpinModel blow_up(const SpinModel& m, const std::vector<int>& mult);

// Kronecker product; index (i,x) -> i*m2.q + x; nu multiplies.
SpinModel tensor(const SpinModel& m1, const SpinModel& m2);

// Frozen ordering of [q]^2 used by the pair constructions below: the q
// diagonal pairs (i,i) by i, then the C(q,2) pairs (i<j) in lex order, then
// their mirrors (j,i) in the same order.
std::vector<std::pair<int, int>> pair_order(int q);

// Pair-spin matrices on the frozen order: ((i,j),(k,l)) -> A(i,k)A(j,l)
// (aligned) and A(i,l)A(j,k) (crossed); nu((i,j)) = nu(i)nu(j).
SpinModel tensor_square(const SpinModel& m);
SpinModel skew_tensor_square(const SpinModel& m);

// Plain matrix square A*A; nu unchanged.
SpinModel square(const SpinModel& m);

inline constexpr std::uint64_t kDefaultExponentCap = 4096;

// H^G on maps f: V(G) -> [q], f encoded as sum f(u)*q^u. f adjacent to f'
// iff A(f(u),f'(u')) = A(f(u'),f'(u)) = 1 for every edge {u,u'} of G.
// Requires 0/1 entries and q^{v(G)} <= cap.
SpinModel exponentiation(const SpinModel& h, const Graph& g,
                         std::uint64_t cap = kDefaultExponentCap);

// Principal submatrix on the looped indices (A(i,i) = 1). Requires 0/1.
SpinModel loop_restrict(const SpinModel& h);

// JSON {"q":int,"A":[[...]],"nu":[...]} with entries either numbers or
// strings; strings and integer numbers parse exactly, other numbers parse
// as floats; "nu" defaults to all-ones.
SpinModel parse_model_json(const std::string& text);
std::string model_json(const SpinModel& m);

// Structural equality: same q, same tags, equal entries and weights.
bool models_equal(const SpinModel& x, const SpinModel& y);
// Equality after some simultaneous row/column (and nu) permutation; q <= 8.
bool models_equal_up_to_permutation(const SpinModel& x, const SpinModel& y);

}  // namespace liftcert
