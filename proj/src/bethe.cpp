#include "liftcert/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "liftcert/errors.hpp"
#include "liftcert/rng.hpp"

namespace liftcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense double view of a model.
struct Dense {
  int q = 0;
  std::vector<double> a;
  std::vector<double> nu;

  explicit Dense(const SpinModel& m) : q(m.q) {
    a.reserve(static_cast<std::size_t>(q) * q);
    nu.reserve(q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) a.push_back(m.A(i, j).to_double());
    for (int i = 0; i < q; ++i) nu.push_back(m.nu[i].to_double());
  }

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * q + j]; }
};

void check_marginal(const Marginal& h, int q, const char* who) {
  if (static_cast<int>(h.size()) != q)
    throw DomainError(std::string(who) + ": marginal has wrong length");
  for (double x : h)
    if (!(x >= -1e-12)) throw DomainError(std::string(who) + ": negative marginal entry");
}

// 0 ln 0 = 0 throughout.
double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

double entropy(const std::vector<double>& p) {
  double s = 0;
  for (double x : p) s -= xlogx(x);
  return s;
}

}  // namespace

Marginal marginal_of(const PairDistribution& h) {
  Marginal out(h.q, 0.0);
  for (int i = 0; i < h.q; ++i)
    for (int j = 0; j < h.q; ++j) out[i] += h.at(i, j);
  return out;
}

bool is_permissive(const SpinModel& m) {
  for (int i = 0; i < m.q; ++i) {
    bool all = true;
    for (int j = 0; j < m.q && all; ++j)
      if (!(m.A(i, j).to_double() > 0)) all = false;
    if (all) return true;
  }
  return false;
}

Marginal bp_step(const SpinModel& m, int d, const Marginal& h) {
  if (d < 2) throw DomainError("bp_step: d >= 2 required");
  check_marginal(h, m.q, "bp_step");
  Dense dm(m);
  Marginal out(dm.q);
  double z = 0;
  for (int i = 0; i < dm.q; ++i) {
    double field = 0;
    for (int j = 0; j < dm.q; ++j) field += dm.at(i, j) * h[j];
    out[i] = dm.nu[i] * std::pow(field, d - 1);
    z += out[i];
  }
  if (!(z > 0)) throw DomainError("bp_step: update vanished before normalization");
  for (double& x : out) x /= z;
  return out;
}

std::vector<BetheSolution> solve_bp(const SpinModel& m, int d, const BpOptions& opt) {
  if (d < 2) throw DomainError("solve_bp: d >= 2 required");
  if (opt.restarts < 1) throw DomainError("solve_bp: restarts >= 1 required");
  m.check();
  const int q = m.q;
  std::vector<std::optional<BetheSolution>> runs(opt.restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < opt.restarts; ++r) {
    Marginal x(q, 1.0 / q);
    if (r > 0) {
      Rng rng(opt.seed + static_cast<std::uint64_t>(r));
      double tot = 0;
      for (int i = 0; i < q; ++i) {
        x[i] = -std::log(1.0 - rng.unit());
        tot += x[i];
      }
      for (double& v : x) v /= tot;
    }
    try {
      BetheSolution sol;
      for (int it = 0; it < opt.max_iter; ++it) {
        Marginal y = bp_step(m, d, x);
        double res = 0;
        for (int i = 0; i < q; ++i) res = std::max(res, std::abs(y[i] - x[i]));
        sol.iterations = it + 1;
        sol.residual = res;
        if (res <= opt.tol) {
          sol.converged = true;
          break;
        }
        double tot = 0;
        for (int i = 0; i < q; ++i) {
          x[i] = opt.damping * x[i] + (1 - opt.damping) * y[i];
          tot += x[i];
        }
        for (double& v : x) v /= tot;
      }
      if (sol.converged) {
        sol.h_tilde = x;
        auto [pd, s] = pair_from_marginal(m, x);
        (void)s;
        sol.h = pd;
        sol.value = phi_tilde(m, d, x);
        runs[r] = sol;
      }
    } catch (const DomainError&) {
      // degenerate start; drop this restart
    }
  }
  std::vector<BetheSolution> sols;
  for (auto& run : runs)
    if (run) sols.push_back(std::move(*run));
  if (sols.empty()) throw DomainError("solve_bp: no restart converged within max_iter");
  std::sort(sols.begin(), sols.end(), [](const BetheSolution& a, const BetheSolution& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.h_tilde < b.h_tilde;
  });
  std::vector<BetheSolution> kept;
  for (BetheSolution& s : sols) {
    bool fresh = true;
    for (const BetheSolution& k : kept) {
      double dist = 0;
      for (int i = 0; i < q; ++i) dist = std::max(dist, std::abs(s.h_tilde[i] - k.h_tilde[i]));
      if (dist <= 1e-8) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(std::move(s));
  }
  return kept;
}

double phi_tilde(const SpinModel& m, int d, const Marginal& h) {
  if (d < 1) throw DomainError("phi_tilde: d >= 1 required");
  check_marginal(h, m.q, "phi_tilde");
  Dense dm(m);
  double s1 = 0, s2 = 0;
  for (int i = 0; i < dm.q; ++i) {
    double field = 0;
    for (int j = 0; j < dm.q; ++j) {
      field += dm.at(i, j) * h[j];
      s2 += dm.at(i, j) * h[i] * h[j];
    }
    s1 += dm.nu[i] * std::pow(field, d);
  }
  if (!(s1 > 0) || !(s2 > 0)) return -kInf;
  return std::log(s1) - 0.5 * d * std::log(s2);
}

std::pair<PairDistribution, double> pair_from_marginal(const SpinModel& m, const Marginal& h) {
  check_marginal(h, m.q, "pair_from_marginal");
  Dense dm(m);
  PairDistribution pd(dm.q);
  double s = 0;
  for (int i = 0; i < dm.q; ++i)
    for (int j = 0; j < dm.q; ++j) {
      pd.at(i, j) = dm.at(i, j) * h[i] * h[j];
      s += pd.at(i, j);
    }
  if (!(s > 0)) throw DomainError("pair_from_marginal: normalizer vanished");
  for (double& x : pd.h) x /= s;
  return {pd, s};
}

double phi_h(const SpinModel& m, int d, const PairDistribution& h) {
  if (d < 1) throw DomainError("phi_h: d >= 1 required");
  if (h.q != m.q) throw DomainError("phi_h: state count mismatch");
  double total = 0;
  for (int i = 0; i < h.q; ++i)
    for (int j = 0; j < h.q; ++j) {
      if (!(h.at(i, j) >= -1e-12)) throw DomainError("phi_h: negative pair entry");
      if (std::abs(h.at(i, j) - h.at(j, i)) > 1e-9)
        throw DomainError("phi_h: pair distribution not symmetric");
      total += h.at(i, j);
    }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("phi_h: pair distribution not normalized");
  Dense dm(m);
  Marginal bar = marginal_of(h);
  double weight = 0;
  for (int i = 0; i < dm.q; ++i) weight += bar[i] * std::log(dm.nu[i]);
  double edge = 0;
  for (int i = 0; i < dm.q; ++i)
    for (int j = 0; j < dm.q; ++j) {
      if (h.at(i, j) <= 0) continue;
      if (dm.at(i, j) <= 0) return -kInf;
      edge += h.at(i, j) * std::log(dm.at(i, j));
    }
  return weight - (d - 1) * entropy(bar) + 0.5 * d * (entropy(h.h) + edge);
}

double kl_divergence(const std::vector<double>& p, const std::vector<double>& r) {
  if (p.size() != r.size()) throw DomainError("kl_divergence: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0) || !(r[i] >= 0)) throw DomainError("kl_divergence: negative entry");
    if (p[i] == 0) continue;
    if (r[i] == 0) return kInf;
    s += p[i] * std::log(p[i] / r[i]);
  }
  return s;
}

double sidorenko_bound(const SpinModel& m, int d) {
  if (d < 1) throw DomainError("sidorenko_bound: d >= 1 required");
  Dense dm(m);
  double t = 0, s = 0;
  for (int i = 0; i < dm.q; ++i) {
    t += dm.nu[i];
    for (int j = 0; j < dm.q; ++j) s += dm.nu[i] * dm.nu[j] * dm.at(i, j);
  }
  if (!(s > 0)) return -kInf;
  return std::log(t) + 0.5 * d * std::log(s / (t * t));
}

PairDistribution sidorenko_pair(const SpinModel& m) {
  Dense dm(m);
  PairDistribution pd(dm.q);
  double s = 0;
  for (int i = 0; i < dm.q; ++i)
    for (int j = 0; j < dm.q; ++j) {
      pd.at(i, j) = dm.nu[i] * dm.nu[j] * dm.at(i, j);
      s += pd.at(i, j);
    }
  if (!(s > 0)) throw DomainError("sidorenko_pair: matrix annihilates the weights");
  for (double& x : pd.h) x /= s;
  return pd;
}

double hardcore_alpha(double lambda, int d) {
  if (d < 2) throw DomainError("hardcore_alpha: d >= 2 required");
  if (!(lambda >= 0)) throw DomainError("hardcore_alpha: lambda >= 0 required");
  if (lambda == 0) return 0;
  auto f = [&](double a) {
    return a / (lambda * (1 - a)) - std::pow((1 - 2 * a) / (1 - a), d);
  };
  double lo = 0, hi = 0.5;  // f(0) = -1, f(1/2) = 1/lambda
  double mid = 0.25;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (std::abs(fm) <= 1e-12) return mid;
    if (fm < 0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

double hardcore_phi(double lambda, int d) {
  if (lambda == 0) return 0;  // only the empty configuration survives
  double a = hardcore_alpha(lambda, d);
  return 0.5 * std::log(lambda * std::pow(1 - a, d - 1) / a);
}

double ising_hstar(double beta, double field, int d) {
  if (d < 2) throw DomainError("ising_hstar: d >= 2 required");
  double theta = std::tanh(beta);
  if (theta == 0) return field;
  // Every fixed point lies within (d-1) atanh|theta| of the field.
  double reach = (d - 1) * std::atanh(std::abs(theta));
  double lo = field - reach, hi = field + reach;
  auto g = [&](double h) { return field + (d - 1) * std::atanh(theta * std::tanh(h)) - h; };
  const int grid = 10000;
  auto point = [&](int k) { return lo + (hi - lo) * (static_cast<double>(k) / grid); };
  for (int k = grid; k >= 1; --k) {
    double b = point(k), a = point(k - 1);
    double gb = g(b);
    if (gb == 0) return b;
    double ga = g(a);
    if (ga == 0) {
      if (k > 1) continue;  // a is also point(k-1) of the next bracket
      return a;
    }
    if ((ga > 0) == (gb > 0)) continue;
    // ga > 0 > gb here: bisect to the crossing.
    while (b - a > 1e-15) {
      double midv = 0.5 * (a + b);
      double gm = g(midv);
      if (std::abs(gm) <= 1e-12) return midv;
      if (gm > 0)
        a = midv;
      else
        b = midv;
    }
    return 0.5 * (a + b);
  }
  return field;  // unreachable: g(lo) >= 0 >= g(hi) guarantees a bracket
}

double ising_phi(double beta, double field, int d) {
  double theta = std::tanh(beta);
  double t = std::tanh(ising_hstar(beta, field, d));
  double pair_term = 0.5 * d * (-0.5 * std::log1p(-theta * theta) - std::log1p(theta * t * t));
  double site_term = std::log(std::exp(field) * std::pow(1 + theta * t, d) +
                              std::exp(-field) * std::pow(1 - theta * t, d));
  return pair_term + site_term;
}

LocalMarginals uniform_marginals(const Graph& g, const PairDistribution& h) {
  LocalMarginals tau;
  tau.vertex.assign(g.n, marginal_of(h));
  tau.edge.assign(g.edges.size(), h.h);
  return tau;
}

double vontobel_eval(const Graph& g, const LocalMarginals& tau, const SpinModel& m) {
  g.check();
  m.check();
  if (g.n == 0) throw DomainError("vontobel_eval: graph has no vertices");
  const int q = m.q;
  if (static_cast<int>(tau.vertex.size()) != g.n)
    throw DomainError("vontobel_eval: one distribution per vertex required");
  if (tau.edge.size() != g.edges.size())
    throw DomainError("vontobel_eval: one joint distribution per edge required");
  for (int u = 0; u < g.n; ++u) {
    const auto& p = tau.vertex[u];
    if (static_cast<int>(p.size()) != q)
      throw DomainError("vontobel_eval: vertex distribution has wrong length");
    double s = 0;
    for (double x : p) {
      if (!(x >= -1e-12)) throw DomainError("vontobel_eval: negative vertex entry");
      s += x;
    }
    if (std::abs(s - 1.0) > 1e-10)
      throw DomainError("vontobel_eval: vertex " + std::to_string(u) + " not normalized");
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& joint = tau.edge[k];
    if (static_cast<int>(joint.size()) != q * q)
      throw DomainError("vontobel_eval: edge joint has wrong length");
    const auto& pu = tau.vertex[g.edges[k].u];
    const auto& pv = tau.vertex[g.edges[k].v];
    for (int i = 0; i < q; ++i) {
      double row = 0, col = 0;
      for (int j = 0; j < q; ++j) {
        double x = joint[static_cast<std::size_t>(i) * q + j];
        if (!(x >= -1e-12)) throw DomainError("vontobel_eval: negative joint entry");
        row += x;
        col += joint[static_cast<std::size_t>(j) * q + i];
      }
      if (std::abs(row - pu[i]) > 1e-10 || std::abs(col - pv[i]) > 1e-10)
        throw DomainError("vontobel_eval: marginal mismatch at edge " + std::to_string(k));
    }
  }
  Dense dm(m);
  double weight = 0, ent = 0;
  for (int u = 0; u < g.n; ++u)
    for (int i = 0; i < q; ++i) {
      weight += tau.vertex[u][i] * std::log(dm.nu[i]);
      ent += xlogx(tau.vertex[u][i]);
    }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& joint = tau.edge[k];
    const auto& pu = tau.vertex[g.edges[k].u];
    const auto& pv = tau.vertex[g.edges[k].v];
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        double x = joint[static_cast<std::size_t>(i) * q + j];
        if (x <= 1e-15) continue;
        if (dm.at(i, j) <= 0) return -kInf;
        weight += x * std::log(dm.at(i, j));
        if (!(pu[i] > 0) || !(pv[j] > 0))
          throw DomainError("vontobel_eval: marginal mismatch at edge " + std::to_string(k));
        ent += x * std::log(x / (pu[i] * pv[j]));
      }
  }
  return (weight - ent) / g.n;
}

}  // namespace liftcert
