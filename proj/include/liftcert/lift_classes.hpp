#pragma once
// Matrix classification for two-lift extremality: 2x2 minor sign tests, the
// equal/crossed pair matrices with their antisymmetric difference block, the
// diagonal sign-switching certificate search, and recognizers for staircase
// shaped 0/1 matrices (threshold and banded).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcert/model.hpp"

namespace liftcert {

struct ScalarMat {
  int n = 0;
  std::vector<Scalar> a;

  ScalarMat() = default;
  explicit ScalarMat(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

  Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Float entries within kSignZeroTol of zero count as zero for sign purposes;
// exact entries use true zero.
inline constexpr double kSignZeroTol = 1e-12;
int entry_sign(const Scalar& s, double tol = kSignZeroTol);

// Every 2x2 minor a(i,r)a(j,s) - a(i,s)a(j,r) over i<j, r<s is >= 0 (tp2)
// or <= 0 (tn2). Vertex weights are ignored.
bool tp2_check(const SpinModel& m);
bool tn2_check(const SpinModel& m);

// Pair matrices over the frozen pair order of pair_order(q):
//   a_eq((i,j),(k,l))    = A(i,k) A(j,l)
//   a_cross((i,j),(k,l)) = A(i,l) A(j,k)
//   e_mat = (a_eq + a_cross) / 2,  d_mat = (a_eq - a_cross) / 2
// d_mat vanishes on every row and column indexed by a diagonal pair; d1 is
// its block on the strictly increasing pairs, so d1 holds half the 2x2
// minors of A.
struct PairMatrices {
  int q = 0;
  std::vector<std::pair<int, int>> order;
  ScalarMat a_eq, a_cross, e_mat, d_mat, d1;
};

PairMatrices build_pair_matrices(const SpinModel& m);

enum class SwitchDirection { NonNeg, NonPos };

// Diagonal +-1 vector sigma with sigma_i d(i,j) sigma_j everywhere >= 0
// (NonNeg) or <= 0 (NonPos), or nullopt if none exists. d must be symmetric.
// Existence is decided by parity union-find on the nonzero sign pattern;
// diagonal entries cannot be switched, so a wrong-signed diagonal fails
// immediately. A returned witness has been re-checked against every entry.
std::optional<std::vector<int>> sign_switchable(const ScalarMat& d, SwitchDirection direction);

enum class Verdict { ClassACertified, ClassBCertified, Both, Unknown };

// "ClassA_certified", "ClassB_certified", "Both", "Unknown".
std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Unknown;
  // Certificate on the strictly increasing pairs and its extension to all
  // q^2 pairs (+1 on diagonal pairs, mirrored sign on decreasing pairs).
  // Present iff verdict != Unknown; for Both this is the NonNeg witness and
  // a NonPos witness can be recovered from sign_switchable directly.
  std::optional<std::vector<int>> s_reduced;
  std::optional<std::vector<int>> s_full;
};

// Runs sign_switchable on d1 in both directions. A NonNeg certificate means
// the doubled graph dominates every 2-lift, Z(G u G, A) >= Z(H, A); a NonPos
// certificate means the crossed double cover dominates, Z(G x K2, A) >=
// Z(H, A); both succeed => Both. Unknown only means this sufficient
// condition failed, never that the inequality is false.
Classification classify(const SpinModel& m);

enum class StairKind { LoopThreshold, ThickPath };

struct StaircaseResult {
  // Row/column ordering realizing the pattern: B(i,j) = A(ordering[i], ordering[j]).
  std::vector<int> ordering;
  std::vector<long long> weights;
  long long alpha = 0;
};

// Searches vertex orderings (identity first, q <= 8) for a weight
// realization of a 0/1 matrix:
//   LoopThreshold: B(i,j) = 1  iff  w_i + w_j <= alpha
//   ThickPath:     B(i,j) = 1  iff  |w_i - w_j| <= alpha
// Emits integer weights verified against every entry; nullopt means not
// recognized within the cap (never an error).
std::optional<StaircaseResult> staircase_recognize(const SpinModel& m, StairKind kind);

}  // namespace liftcert
