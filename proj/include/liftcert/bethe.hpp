#pragma once
// Bethe free energy of the infinite d-regular tree: belief-propagation fixed
// points, the two equivalent free-energy functionals (pair-distribution and
// message forms), the local-marginal functional on finite graphs, the
// product-measure lower bound, and closed forms for the hard-core and
// two-state ferromagnet cases. Everything here works in doubles; exact
// models are converted on entry.

#include <cstdint>
#include <utility>
#include <vector>

#include "liftcert/graph.hpp"
#include "liftcert/model.hpp"

namespace liftcert {

// Probability vector on the q states.
using Marginal = std::vector<double>;

struct PairDistribution {
  int q = 0;
  std::vector<double> h;  // row-major q x q, symmetric

  PairDistribution() = default;
  explicit PairDistribution(int states)
      : q(states), h(static_cast<std::size_t>(states) * states, 0.0) {}

  double& at(int i, int j) { return h[static_cast<std::size_t>(i) * q + j]; }
  double at(int i, int j) const { return h[static_cast<std::size_t>(i) * q + j]; }
};

// Row sums of the pair distribution.
Marginal marginal_of(const PairDistribution& h);

// Some state is compatible with every state. BP behaves best on such
// matrices; nothing here requires it.
bool is_permissive(const SpinModel& m);

// h'(i) = nu(i) (sum_j a(i,j) h(j))^(d-1), normalized. Throws DomainError
// when the image vanishes before normalization.
Marginal bp_step(const SpinModel& m, int d, const Marginal& h);

struct BetheSolution {
  Marginal h_tilde;
  PairDistribution h;  // pair distribution induced by h_tilde
  double value = 0.0;  // message-form free energy at h_tilde
  int iterations = 0;
  double residual = 0.0;  // max-norm of bp_step(h_tilde) - h_tilde at exit
  bool converged = false;
};

struct BpOptions {
  int restarts = 50;  // restart 0 starts uniform, the rest from seeded simplex points
  std::uint64_t seed = 0;
  double tol = 1e-12;
  int max_iter = 100000;
  double damping = 0.5;
};

// Damped BP iteration from several starts; restarts run in parallel and the
// converged solutions are deduplicated (max-norm 1e-8) and sorted by value
// descending, ties by lexicographic h_tilde, so output is deterministic for
// a fixed seed. Throws DomainError if no restart converges.
std::vector<BetheSolution> solve_bp(const SpinModel& m, int d, const BpOptions& opt = {});

// ln(sum_i nu(i) (sum_j a(i,j) h(j))^d) - (d/2) ln(sum_ij a(i,j) h(i) h(j)).
// Returns -infinity when either sum vanishes.
double phi_tilde(const SpinModel& m, int d, const Marginal& h);

// h(i,j) = a(i,j) h(i) h(j) / S with S the normalizer, returned alongside.
std::pair<PairDistribution, double> pair_from_marginal(const SpinModel& m, const Marginal& h);

// sum_i hbar(i) ln nu(i) - (d-1) H(hbar) + (d/2)(H(h) + sum h(i,j) ln a(i,j))
// with 0 ln 0 = 0. Returns -infinity when h puts mass where a vanishes.
double phi_h(const SpinModel& m, int d, const PairDistribution& h);

// sum_i p(i) ln(p(i)/r(i)); +infinity when r vanishes under positive p mass.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& r);

// Product-measure lower bound
//   ln(sum nu) + (d/2) ln(sum_ij nu(i) nu(j) a(i,j) / (sum nu)^2)
// and the pair distribution attaining it, h(i,j) = nu(i) nu(j) a(i,j) / S.
double sidorenko_bound(const SpinModel& m, int d);
PairDistribution sidorenko_pair(const SpinModel& m);

// Unique root of alpha/(lambda(1-alpha)) = ((1-2 alpha)/(1-alpha))^d on
// [0, 1/2], by bisection to residual 1e-12; the tree free energy of the
// hard-core model at activity lambda is
//   (1/2) ln(lambda (1-alpha)^(d-1) / alpha).
// lambda = 0 gives alpha = 0 and value 0.
double hardcore_alpha(double lambda, int d);
double hardcore_phi(double lambda, int d);

// Largest solution of h = field + (d-1) atanh(tanh(beta) tanh(h)), found by
// bracketing on a 10^4-point grid over the containing interval and bisecting
// to 1e-12; ising_phi plugs it into the tree free-energy formula.
double ising_hstar(double beta, double field, int d);
double ising_phi(double beta, double field, int d);

struct LocalMarginals {
  std::vector<std::vector<double>> vertex;  // one distribution on [q] per vertex
  std::vector<std::vector<double>> edge;    // one joint on [q]^2 per edge, row = first endpoint
};

// Translation-invariant marginals: every vertex gets marginal_of(h), every
// edge gets h itself.
LocalMarginals uniform_marginals(const Graph& g, const PairDistribution& h);

// (U - H)/v(G) where U holds the weight terms and H the entropy terms of the
// local-marginal free energy. Marginal consistency of tau is validated to
// 1e-10 (errors name the offending edge); support violations return
// -infinity. On a d-regular graph with translation-invariant tau this equals
// phi_h of the shared pair distribution.
double vontobel_eval(const Graph& g, const LocalMarginals& tau, const SpinModel& m);

}  // namespace liftcert
