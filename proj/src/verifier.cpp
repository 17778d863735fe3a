#include "liftcert/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "liftcert/errors.hpp"
#include "liftcert/lift_classes.hpp"
#include "liftcert/rng.hpp"

namespace liftcert {

std::string claim_name(LiftClaim c) {
  return c == LiftClaim::UnionMax ? "UnionMax" : "CrossMax";
}

Graph claimed_lift(const Graph& g, LiftClaim c) {
  return c == LiftClaim::UnionMax ? union_double(g) : times_k2(g);
}

namespace {

Scalar scalar_pow(const Scalar& base, int e) {
  Scalar out = base.is_exact() ? Scalar(1) : Scalar::real(1.0);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Rational rational_pow(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

bool fits_exhaustive(int m, std::uint64_t limit) {
  return m < 64 && (std::uint64_t(1) << m) <= limit;
}

// Signings to scan: every index when exhaustive, else seeded samples.
struct ScanPlan {
  bool exhaustive = true;
  std::uint64_t count = 0;                  // signings to evaluate
  std::vector<std::vector<int8_t>> sampled; // sampled mode only
};

ScanPlan make_plan(const Graph& g, const ScanOptions& opt) {
  ScanPlan plan;
  int m = g.edge_count();
  if (fits_exhaustive(m, opt.exhaustive_limit)) {
    plan.exhaustive = true;
    plan.count = std::uint64_t(1) << m;
    return plan;
  }
  if (opt.sample_count < 1) throw DomainError("scan: sample_count must be positive");
  plan.exhaustive = false;
  plan.count = static_cast<std::uint64_t>(opt.sample_count);
  Rng rng(opt.seed);
  plan.sampled.reserve(plan.count);
  for (std::uint64_t s = 0; s < plan.count; ++s) {
    std::vector<int8_t> signs(m);
    for (int e = 0; e < m; ++e) signs[e] = rng.below(2) == 0 ? int8_t(1) : int8_t(-1);
    plan.sampled.push_back(std::move(signs));
  }
  return plan;
}

std::vector<int8_t> plan_signs(const ScanPlan& plan, int m, std::uint64_t i) {
  return plan.exhaustive ? signs_from_index(m, i) : plan.sampled[i];
}

// Evaluates `eval` on every planned lift in parallel; the value vector is
// reduced serially afterwards so results are deterministic. Exceptions from
// worker iterations are captured and rethrown once, naming the signing.
std::vector<Scalar> evaluate_lifts(const Graph& g, const ScanPlan& plan,
                                   const std::function<Scalar(const Graph&)>& eval) {
  int m = g.edge_count();
  std::vector<Scalar> values(plan.count);
  std::string error_kind, error_text;
  std::int64_t total = static_cast<std::int64_t>(plan.count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      Graph h = apply_lift(g, plan_signs(plan, m, static_cast<std::uint64_t>(i)));
      values[i] = eval(h);
    } catch (const std::exception& e) {
#pragma omp critical(liftcert_scan_error)
      if (error_kind.empty()) {
        error_kind = dynamic_cast<const CapExceeded*>(&e) ? "cap" : "domain";
        error_text = "scan aborted at signing " + std::to_string(i) + ": " + e.what();
      }
    }
  }
  if (!error_kind.empty()) {
    if (error_kind == "cap") throw CapExceeded(error_text);
    throw DomainError(error_text);
  }
  return values;
}

bool is_claimed_signing(const ScanPlan& plan, int m, std::uint64_t i, LiftClaim claim) {
  if (plan.exhaustive) {
    return claim == LiftClaim::UnionMax ? (i == 0) : (i == (std::uint64_t(1) << m) - 1);
  }
  int8_t want = claim == LiftClaim::UnionMax ? 1 : -1;
  for (int8_t s : plan.sampled[i])
    if (s != want) return false;
  return true;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Compares every scanned value against the claimed one and fills the
// margin/status/violations part of a row.
void reduce_scan(ScanRow& row, const Graph& g, const ScanPlan& plan, const Scalar& claimed,
                 const std::vector<Scalar>& values, LiftClaim claim, bool exact_mode,
                 double slack) {
  int m = g.edge_count();
  std::optional<Scalar> best_rival;
  bool used_slack = false;
  for (std::uint64_t i = 0; i < plan.count; ++i) {
    if (is_claimed_signing(plan, m, i, claim)) continue;
    const Scalar& z = values[i];
    if (!best_rival || z > *best_rival) best_rival = z;
    bool bad;
    if (exact_mode) {
      bad = z > claimed;
    } else {
      double zc = claimed.to_double(), zr = z.to_double();
      double scale = std::max({std::fabs(zc), std::fabs(zr), 1.0});
      bad = zr - zc > slack * scale;
      if (!bad && zr > zc) used_slack = true;
    }
    if (bad) {
      std::uint64_t id = plan.exhaustive ? i : index_from_signs(plan.sampled[i]);
      row.violations.push_back("signing " + std::to_string(id) + ": lift value " + z.str() +
                               " exceeds claimed " + claimed.str());
    }
  }
  row.margin = best_rival ? (claimed - *best_rival).to_double() : 0.0;
  if (!row.violations.empty())
    row.status = "fail";
  else
    row.status = used_slack ? "marginal" : "pass";
}

ScanRow skip_row(std::string suite, std::string graph, std::string model, std::string claim) {
  ScanRow row;
  row.suite = std::move(suite);
  row.graph = std::move(graph);
  row.model = std::move(model);
  row.claim = std::move(claim);
  row.scanned = 0;
  row.exhaustive = true;
  row.margin = 0.0;
  row.status = "skip";
  return row;
}

}  // namespace

ScanRow verify_two_lift_extremal(const Graph& g, const SpinModel& m, LiftClaim claim,
                                 const ScanOptions& opt, const std::string& graph_label,
                                 const std::string& model_label) {
  g.check();
  m.check();
  ScanRow row;
  row.suite = "lifts";
  row.graph = graph_label;
  row.model = model_label;
  row.claim = claim_name(claim);

  ScanPlan plan = make_plan(g, opt);
  row.scanned = plan.count;
  row.exhaustive = plan.exhaustive;

  Scalar claimed;
  try {
    claimed = partition_value(claimed_lift(g, claim), m, opt.caps);
  } catch (const CapExceeded& e) {
    throw CapExceeded(std::string("scan aborted at the claimed lift: ") + e.what());
  }
  auto values = evaluate_lifts(
      g, plan, [&](const Graph& h) { return partition_value(h, m, opt.caps); });
  reduce_scan(row, g, plan, claimed, values, claim, m.a[0].is_exact(), opt.float_slack);
  return row;
}

std::vector<ScanRow> verify_counts(const Graph& g, const ScanOptions& opt,
                                   const std::string& graph_label) {
  g.check();
  int m = g.edge_count();
  if (!fits_exhaustive(m, opt.exhaustive_limit))
    throw CapExceeded("verify_counts: needs an exhaustive scan; raise exhaustive_limit past 2^" +
                      std::to_string(m));
  Graph crossed = times_k2(g);
  CountVector bound_i = independent_set_counts(crossed);
  CountVector bound_m = matching_counts(crossed);

  auto count_at = [](const CountVector& c, std::size_t k) {
    return k < c.size() ? c[k] : BigInt(0);
  };

  struct Result {
    double margin_i = 0.0, margin_m = 0.0;
    std::vector<std::string> bad_i, bad_m;
  };
  std::uint64_t total = std::uint64_t(1) << m;
  std::vector<Result> results(total);
  std::string error_text;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
    try {
      Graph h = apply_lift(g, signs_from_index(m, static_cast<std::uint64_t>(i)));
      CountVector ci = independent_set_counts(h);
      CountVector cm = matching_counts(h);
      Result& r = results[i];
      std::size_t ki = std::max(ci.size(), bound_i.size());
      std::size_t km = std::max(cm.size(), bound_m.size());
      bool first = true;
      for (std::size_t k = 0; k < ki; ++k) {
        BigInt diff = count_at(bound_i, k) - count_at(ci, k);
        double d = diff.convert_to<double>();
        if (first || d < r.margin_i) r.margin_i = d;
        first = false;
        if (diff < 0)
          r.bad_i.push_back("signing " + std::to_string(i) + ": independent sets of size " +
                            std::to_string(k) + " exceed the bound by " + BigInt(-diff).str());
      }
      first = true;
      for (std::size_t k = 0; k < km; ++k) {
        BigInt diff = count_at(bound_m, k) - count_at(cm, k);
        double d = diff.convert_to<double>();
        if (first || d < r.margin_m) r.margin_m = d;
        first = false;
        if (diff < 0)
          r.bad_m.push_back("signing " + std::to_string(i) + ": matchings of size " +
                            std::to_string(k) + " exceed the bound by " + BigInt(-diff).str());
      }
    } catch (const std::exception& e) {
#pragma omp critical(liftcert_counts_error)
      if (error_text.empty())
        error_text = "counts aborted at signing " + std::to_string(i) + ": " + e.what();
    }
  }
  if (!error_text.empty()) throw CapExceeded(error_text);

  auto make_row = [&](const char* which, double Result::*margin,
                      std::vector<std::string> Result::*bad) {
    ScanRow row;
    row.suite = "counts";
    row.graph = graph_label;
    row.model = which;
    row.claim = "CrossMax";
    row.scanned = total;
    row.exhaustive = true;
    bool first = true;
    for (std::uint64_t i = 0; i < total; ++i) {
      if (i == total - 1) continue;  // the all-crossed signing is the bound itself
      const Result& r = results[i];
      if (first || r.*margin < row.margin) row.margin = r.*margin;
      first = false;
      for (const std::string& v : r.*bad) row.violations.push_back(v);
    }
    row.status = row.violations.empty() ? "pass" : "fail";
    return row;
  };
  return {make_row("independent_sets", &Result::margin_i, &Result::bad_i),
          make_row("matchings", &Result::margin_m, &Result::bad_m)};
}

std::vector<ScanRow> verify_tutte_lifts(const Graph& g, const std::vector<RCParams>& grid,
                                        const ScanOptions& opt, const std::string& graph_label) {
  g.check();
  std::vector<ScanRow> rows;
  for (const RCParams& p : grid) {
    if (p.q < Scalar(1) || p.w.sign() < 0)
      throw DomainError("verify_tutte_lifts: the union claim needs q >= 1 and w >= 0");
    ScanRow row;
    row.suite = "tutte";
    row.graph = graph_label;
    row.model = "rc(q=" + p.q.str() + ",w=" + p.w.str() + ")";
    row.claim = "UnionMax";
    ScanPlan plan = make_plan(g, opt);
    row.scanned = plan.count;
    row.exhaustive = plan.exhaustive;
    Scalar claimed = random_cluster(union_double(g), p, opt.caps);
    auto values =
        evaluate_lifts(g, plan, [&](const Graph& h) { return random_cluster(h, p, opt.caps); });
    reduce_scan(row, g, plan, claimed, values, LiftClaim::UnionMax, p.q.is_exact(),
                opt.float_slack);
    rows.push_back(std::move(row));
  }
  return rows;
}

ScanRow verify_rc_potts(const Graph& g, int q, const Scalar& w, const ScanOptions& opt,
                        const std::string& graph_label) {
  if (q < 1) throw DomainError("verify_rc_potts: q must be a positive integer");
  if (!w.is_exact()) throw DomainError("verify_rc_potts: w must be exact");
  ScanRow row;
  row.suite = "tutte";
  row.graph = graph_label;
  row.model = "rc=potts(q=" + std::to_string(q) + ",w=" + w.str() + ")";
  row.claim = "equal";
  row.scanned = 1;
  try {
    Scalar lhs = random_cluster(g, RCParams{Scalar(q), w}, opt.caps);
    Scalar rhs = partition_value(g, potts_model(q, w), opt.caps);
    row.margin = (lhs - rhs).to_double();
    if (lhs == rhs) {
      row.status = "pass";
    } else {
      row.status = "fail";
      row.violations.push_back("random-cluster value " + lhs.str() +
                               " != spin partition value " + rhs.str());
    }
  } catch (const CapExceeded&) {
    return skip_row("tutte", graph_label, row.model, "equal");
  }
  return row;
}

ScanRow verify_klift_potts(const Graph& g, int k, const RCParams& p, int samples,
                           const ScanOptions& opt, const std::string& graph_label) {
  g.check();
  if (k < 1) throw DomainError("verify_klift_potts: k must be >= 1");
  if (samples < 1) throw DomainError("verify_klift_potts: samples must be >= 1");
  if (p.q < Scalar(1) || p.w.sign() < 0)
    throw DomainError("verify_klift_potts: the power bound needs q >= 1 and w >= 0");
  ScanRow row;
  row.suite = "klift";
  row.graph = graph_label;
  row.model = "rc(q=" + p.q.str() + ",w=" + p.w.str() + ") k=" + std::to_string(k);
  row.claim = "PowerMax";
  row.scanned = static_cast<std::uint64_t>(samples);
  row.exhaustive = false;
  Scalar bound = scalar_pow(random_cluster(g, p, opt.caps), k);
  Rng rng(opt.seed);
  std::optional<Scalar> best;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::vector<int>> perms;
    perms.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) perms.push_back(rng.permutation(k));
    Graph h = k_lift(g, perms, k);
    Scalar z = random_cluster(h, p, opt.caps);
    if (!best || z > *best) best = z;
    bool bad = p.q.is_exact() ? z > bound : [&] {
      double zb = bound.to_double(), zh = z.to_double();
      double scale = std::max({std::fabs(zb), std::fabs(zh), 1.0});
      return zh - zb > opt.float_slack * scale;
    }();
    if (bad)
      row.violations.push_back("sample " + std::to_string(s) + ": lift value " + z.str() +
                               " exceeds the power bound " + bound.str());
    if (k == 1 && z != bound)
      row.violations.push_back("sample " + std::to_string(s) +
                               ": a 1-lift must reproduce the base value exactly");
  }
  row.margin = best ? (bound - *best).to_double() : 0.0;
  row.status = row.violations.empty() ? "pass" : "fail";
  return row;
}

namespace {

ScanRow identity_row(const std::string& graph, const std::string& model,
                     const std::function<std::pair<Scalar, Scalar>()>& sides) {
  ScanRow row;
  row.suite = "identities";
  row.graph = graph;
  row.model = model;
  row.claim = "equal";
  row.scanned = 1;
  try {
    auto [lhs, rhs] = sides();
    if (lhs == rhs) {
      row.status = "pass";
    } else {
      row.status = "fail";
      row.margin = (lhs - rhs).to_double();
      row.violations.push_back("lhs " + lhs.str() + " != rhs " + rhs.str());
    }
  } catch (const CapExceeded&) {
    row.status = "skip";
    row.scanned = 0;
  }
  return row;
}

}  // namespace

std::vector<ScanRow> verify_identity_suite(const std::vector<NamedGraph>& catalog,
                                           const ScanOptions& opt) {
  std::vector<ScanRow> rows;
  const PartitionCaps& caps = opt.caps;

  struct Pair {
    const char* label;
    SpinModel first, second;
  };
  std::vector<Pair> tensor_pairs;
  tensor_pairs.push_back({"tensor ind (x) wr", ind_model(), wr_model()});
  tensor_pairs.push_back({"tensor ind (x) potts(2,2)", ind_model(), potts_model(2, Scalar(2))});
  for (const NamedGraph& ng : catalog) {
    for (const Pair& tp : tensor_pairs) {
      rows.push_back(identity_row(ng.name, tp.label, [&]() {
        Scalar lhs = partition_value(ng.graph, tensor(tp.first, tp.second), caps);
        Scalar rhs =
            partition_value(ng.graph, tp.first, caps) * partition_value(ng.graph, tp.second, caps);
        return std::make_pair(lhs, rhs);
      }));
    }
  }

  struct PowerCase {
    const char* g;
    const char* gp;
    const char* h;
  };
  for (const PowerCase& pc : {PowerCase{"c4", "k2", "k3"}, PowerCase{"c5", "k2", "k3"},
                              PowerCase{"p4", "c4", "k3"}, PowerCase{"k3", "c4", "k3"},
                              PowerCase{"c4", "c4", "k3"}, PowerCase{"c6", "k2", "k2"}}) {
    rows.push_back(identity_row(std::string(pc.g) + " x " + pc.gp + " -> " + pc.h, "hom power",
                                [&, pc]() {
                                  Graph g = catalog_graph(pc.g);
                                  Graph gp = catalog_graph(pc.gp);
                                  Graph h = catalog_graph(pc.h);
                                  Scalar lhs = hom_count(tensor_product(g, gp), h, caps);
                                  Scalar rhs = partition_value(
                                      g, exponentiation(model_from_graph(h), gp), caps);
                                  return std::make_pair(lhs, rhs);
                                }));
  }

  Graph half_looped;
  half_looped.n = 2;
  half_looped.edges = {{0, 0}, {0, 1}};
  Graph looped_path = path_graph(3);
  looped_path.edges.push_back({0, 0});
  looped_path.edges.push_back({1, 1});
  struct Target {
    const char* label;
    const Graph* h;
  };
  for (const Target& t : {Target{"hom into half-looped edge", &half_looped},
                          Target{"hom into looped path", &looped_path}}) {
    for (const NamedGraph& ng : catalog) {
      rows.push_back(identity_row(ng.name, t.label, [&]() {
        Scalar lhs = partition_value(add_loops(ng.graph), model_from_graph(*t.h), caps);
        Scalar rhs = partition_value(ng.graph, loop_restrict(model_from_graph(*t.h)), caps);
        return std::make_pair(lhs, rhs);
      }));
    }
  }

  struct Named {
    const char* label;
    SpinModel m;
  };
  for (const Named& nm : {Named{"subdivision ind", ind_model()}, Named{"subdivision wr", wr_model()}}) {
    for (const NamedGraph& ng : catalog) {
      rows.push_back(identity_row(ng.name, nm.label, [&]() {
        Scalar lhs = partition_value(subdivision(ng.graph), nm.m, caps);
        Scalar rhs = partition_value(ng.graph, square(nm.m), caps);
        return std::make_pair(lhs, rhs);
      }));
    }
  }

  struct Blow {
    const char* label;
    SpinModel m;
    std::vector<int> mult;
  };
  for (const Blow& b : {Blow{"blow-up ind (1,2)", ind_model(), {1, 2}},
                        Blow{"blow-up wr (2,1,1)", wr_model(), {2, 1, 1}}}) {
    for (const NamedGraph& ng : catalog) {
      rows.push_back(identity_row(ng.name, b.label, [&]() {
        SpinModel weighted = b.m;
        for (int i = 0; i < weighted.q; ++i) weighted.nu[i] = Scalar(b.mult[i]);
        Scalar lhs = partition_value(ng.graph, weighted, caps);
        Scalar rhs = partition_value(ng.graph, blow_up(b.m, b.mult), caps);
        return std::make_pair(lhs, rhs);
      }));
    }
  }

  {
    ScanRow row;
    row.suite = "identities";
    row.graph = "k2";
    row.model = "looped square root of the pair power";
    row.claim = "equal";
    row.scanned = 1;
    SpinModel powered = exponentiation(ind_model(), catalog_graph("k2"));
    bool ok = models_equal_up_to_permutation(loop_restrict(powered), wr_model());
    row.status = ok ? "pass" : "fail";
    if (!ok) row.violations.push_back("restriction to looped states is not the safe-pair model");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScanRow> verify_coloring_bound(const std::vector<NamedGraph>& catalog,
                                           const std::vector<int>& qs, const ScanOptions& opt) {
  std::vector<ScanRow> rows;
  for (const NamedGraph& ng : catalog) {
    if (!bipartition(ng.graph)) continue;
    for (int q : qs) {
      if (q < 2) throw DomainError("verify_coloring_bound: q must be >= 2");
      ScanRow row;
      row.suite = "coloring";
      row.graph = ng.name;
      row.model = "colorings q=" + std::to_string(q);
      row.claim = "LowerBound";
      row.scanned = 1;
      try {
        Scalar homs = hom_count(ng.graph, complete_graph(q), opt.caps);
        int v = ng.graph.n, e = ng.graph.edge_count();
        Rational bound = rational_pow(Rational(q), v) *
                         rational_pow(Rational(q - 1) / Rational(q), e);
        Scalar diff = homs - Scalar::exact(bound);
        row.margin = diff.to_double();
        if (diff.sign() >= 0) {
          row.status = "pass";
        } else {
          row.status = "fail";
          row.violations.push_back("coloring count " + homs.str() + " is below the bound " +
                                   Scalar::exact(bound).str());
        }
      } catch (const CapExceeded&) {
        row.status = "skip";
        row.scanned = 0;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ScanRow> verify_fkg(int graphs, const ScanOptions& opt) {
  if (graphs < 1) throw DomainError("verify_fkg: need at least one graph");
  std::vector<ScanRow> rows;
  Rng rng(opt.seed + 7777);
  const Scalar half = Scalar::exact(Rational(1, 2));
  std::vector<RCParams> grid;
  for (int q : {1, 2, 3})
    for (const Scalar& w : {half, Scalar(1), Scalar(2)}) grid.push_back({Scalar(q), w});

  for (int t = 0; t < graphs; ++t) {
    Graph g;
    do {
      g = random_multigraph(rng, 6, 8);
    } while (g.edge_count() < 2);  // need two distinct edges to correlate
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.edge_count() && pairs.size() < 15; ++e)
      for (int f = e + 1; f < g.edge_count() && pairs.size() < 15; ++f) pairs.push_back({e, f});

    ScanRow row;
    row.suite = "fkg";
    row.graph = "mg" + std::to_string(t) + "(n=" + std::to_string(g.n) +
                ",m=" + std::to_string(g.edge_count()) + ")";
    row.model = "rc grid q in {1,2,3} w in {1/2,1,2}";
    row.claim = "PosCorrelation";
    row.scanned = static_cast<std::uint64_t>(pairs.size()) * grid.size();
    bool first = true;
    for (const RCParams& p : grid) {
      for (auto [e, f] : pairs) {
        FkgReport rep = fkg_check(g, p, e, f, opt.caps);
        Scalar lattice = rep.lhs - rep.rhs;
        Scalar correlation = rep.p_both - rep.p_e * rep.p_f;
        double worst = std::min(lattice.to_double(), correlation.to_double());
        if (first || worst < row.margin) row.margin = worst;
        first = false;
        if (lattice.sign() < 0 || correlation.sign() < 0)
          row.violations.push_back("edges (" + std::to_string(e) + "," + std::to_string(f) +
                                   ") at q=" + p.q.str() + " w=" + p.w.str() +
                                   ": correlation fails");
      }
    }
    row.status = row.violations.empty() ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Per-pair cost guard for the default suites: scanned signings times the
// worst-case q^(2v) assignment count per lift.
bool scan_affordable(const Graph& g, int q, const ScanOptions& opt, long double budget) {
  int m = g.edge_count();
  long double count = fits_exhaustive(m, opt.exhaustive_limit)
                          ? std::pow(2.0L, static_cast<long double>(m))
                          : static_cast<long double>(opt.sample_count);
  return count * std::pow(static_cast<long double>(q), 2.0L * g.n) <= budget;
}

constexpr long double kLiftScanBudget = 6.0e8L;

std::vector<ScanRow> suite_lifts(const std::vector<NamedGraph>& catalog, const ScanOptions& opt) {
  struct Entry {
    std::string label;
    SpinModel model;
  };
  std::vector<Entry> models;
  models.push_back({"wr", wr_model()});
  models.push_back({"ind", ind_model()});
  models.push_back({"ising(0.5,0.2)", ising_model(0.5, 0.2)});
  models.push_back({"ising(-0.5,0)", ising_model(-0.5, 0.0)});
  models.push_back({"potts(3,1)", potts_model(3, Scalar(1))});

  std::vector<ScanRow> rows;
  for (const Entry& entry : models) {
    Classification c = classify(entry.model);
    std::vector<LiftClaim> claims;
    if (c.verdict == Verdict::ClassACertified || c.verdict == Verdict::Both)
      claims.push_back(LiftClaim::UnionMax);
    if (c.verdict == Verdict::ClassBCertified || c.verdict == Verdict::Both)
      claims.push_back(LiftClaim::CrossMax);
    if (claims.empty()) {
      rows.push_back(skip_row("lifts", "-", entry.label, "none"));
      continue;
    }
    for (const NamedGraph& ng : catalog) {
      for (LiftClaim claim : claims) {
        if (!scan_affordable(ng.graph, entry.model.q, opt, kLiftScanBudget)) {
          rows.push_back(skip_row("lifts", ng.name, entry.label, claim_name(claim)));
          continue;
        }
        rows.push_back(
            verify_two_lift_extremal(ng.graph, entry.model, claim, opt, ng.name, entry.label));
      }
    }
  }
  return rows;
}

std::vector<ScanRow> suite_counts(const std::vector<NamedGraph>& catalog, const ScanOptions& opt) {
  std::vector<ScanRow> rows;
  for (const NamedGraph& ng : catalog) {
    if (ng.graph.edge_count() > 8 || ng.graph.n > 12) continue;
    for (ScanRow& row : verify_counts(ng.graph, opt, ng.name)) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScanRow> suite_tutte(const std::vector<NamedGraph>& catalog, const ScanOptions& opt) {
  const Scalar half = Scalar::exact(Rational(1, 2));
  const Scalar three_halves = Scalar::exact(Rational(3, 2));
  std::vector<RCParams> grid;
  for (const Scalar& q : {Scalar(1), three_halves, Scalar(2), Scalar(3)})
    for (const Scalar& w : {Scalar(0), half, Scalar(1), Scalar(2)}) grid.push_back({q, w});

  std::vector<ScanRow> rows;
  for (const NamedGraph& ng : catalog) {
    if (ng.graph.edge_count() > 6) continue;
    for (ScanRow& row : verify_tutte_lifts(ng.graph, grid, opt, ng.name))
      rows.push_back(std::move(row));
  }
  for (const NamedGraph& ng : catalog) {
    if (ng.graph.edge_count() > 15) continue;
    for (int q : {1, 2, 3})
      for (const Scalar& w : {half, Scalar(1), Scalar(2)})
        rows.push_back(verify_rc_potts(ng.graph, q, w, opt, ng.name));
  }
  return rows;
}

std::vector<ScanRow> suite_klift(const ScanOptions& opt) {
  const Scalar half = Scalar::exact(Rational(1, 2));
  const Scalar three_halves = Scalar::exact(Rational(3, 2));
  std::vector<ScanRow> rows;
  rows.push_back(verify_klift_potts(catalog_graph("k3"), 1, {Scalar(2), Scalar(1)}, 10, opt, "k3"));
  rows.push_back(verify_klift_potts(catalog_graph("k3"), 2, {Scalar(2), Scalar(1)}, 50, opt, "k3"));
  rows.push_back(verify_klift_potts(catalog_graph("k3"), 3, {Scalar(2), Scalar(1)}, 50, opt, "k3"));
  rows.push_back(verify_klift_potts(catalog_graph("c4"), 3, {three_halves, half}, 50, opt, "c4"));
  rows.push_back(verify_klift_potts(catalog_graph("k4"), 2, {Scalar(2), Scalar(2)}, 50, opt, "k4"));
  return rows;
}

std::vector<ScanRow> suite_explore(const std::vector<NamedGraph>& catalog,
                                   const ScanOptions& opt) {
  std::vector<ScanRow> rows;
  for (int i = 0; i < 4; ++i) {
    int q = 2 + (i % 2);
    Rng rng(opt.seed * 0x9e3779b9u + static_cast<std::uint64_t>(i) + 1);
    SpinModel m;
    m.q = q;
    m.a.assign(static_cast<std::size_t>(q) * q, Scalar::real(0.0));
    for (int r = 0; r < q; ++r)
      for (int c = r; c < q; ++c) {
        Scalar x = Scalar::real(rng.unit());
        m.a[static_cast<std::size_t>(r) * q + c] = x;
        m.a[static_cast<std::size_t>(c) * q + r] = x;
      }
    m.nu.assign(q, Scalar::real(1.0));
    std::string label = "random q=" + std::to_string(q) + " #" + std::to_string(i);
    for (const NamedGraph& ng : catalog) {
      if (!bipartition(ng.graph)) continue;
      if (ng.graph.edge_count() > 6 || ng.graph.n > 6) continue;
      ScanRow row =
          verify_two_lift_extremal(ng.graph, m, LiftClaim::UnionMax, opt, ng.name, label);
      row.suite = "explore";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"lifts", "counts", "tutte", "klift", "identities", "coloring", "fkg", "all", "explore"};
}

SuiteReport run_suite(const std::string& name, const std::vector<NamedGraph>& catalog,
                      const ScanOptions& opt) {
  SuiteReport report;
  report.suite = name;
  if (name == "lifts") {
    report.rows = suite_lifts(catalog, opt);
  } else if (name == "counts") {
    report.rows = suite_counts(catalog, opt);
  } else if (name == "tutte") {
    report.rows = suite_tutte(catalog, opt);
  } else if (name == "klift") {
    report.rows = suite_klift(opt);
  } else if (name == "identities") {
    report.rows = verify_identity_suite(catalog, opt);
  } else if (name == "coloring") {
    report.rows = verify_coloring_bound(catalog, {2, 3, 4}, opt);
  } else if (name == "fkg") {
    report.rows = verify_fkg(50, opt);
  } else if (name == "explore") {
    report.rows = suite_explore(catalog, opt);
  } else if (name == "all") {
    throw DomainError("run_suite: use run_all for the combined suite");
  } else {
    throw DomainError("run_suite: unknown suite '" + name + "'");
  }
  for (const ScanRow& row : report.rows)
    if (row.failed()) report.all_pass = false;
  return report;
}

std::vector<SuiteReport> run_all(const std::vector<NamedGraph>& catalog, const ScanOptions& opt) {
  std::vector<SuiteReport> reports;
  for (const char* name : {"lifts", "counts", "tutte", "klift", "identities", "coloring", "fkg"})
    reports.push_back(run_suite(name, catalog, opt));
  return reports;
}

bool reports_all_pass(const std::vector<SuiteReport>& reports) {
  for (const SuiteReport& r : reports)
    if (!r.all_pass) return false;
  return true;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const std::vector<SuiteReport>& reports) {
  std::string out = "suite,graph,model,claim,scanned,exhaustive,margin,status\n";
  for (const SuiteReport& rep : reports) {
    for (const ScanRow& row : rep.rows) {
      out += csv_field(row.suite) + ',' + csv_field(row.graph) + ',' + csv_field(row.model) + ',' +
             csv_field(row.claim) + ',' + std::to_string(row.scanned) + ',' +
             (row.exhaustive ? "true" : "false") + ',' + fmt_double(row.margin) + ',' +
             csv_field(row.status) + '\n';
    }
  }
  return out;
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json doc;
  doc["all_pass"] = reports_all_pass(reports);
  doc["suites"] = nlohmann::ordered_json::array();
  for (const SuiteReport& rep : reports) {
    nlohmann::ordered_json jr;
    jr["suite"] = rep.suite;
    jr["all_pass"] = rep.all_pass;
    jr["rows"] = nlohmann::ordered_json::array();
    for (const ScanRow& row : rep.rows) {
      nlohmann::ordered_json j;
      j["suite"] = row.suite;
      j["graph"] = row.graph;
      j["model"] = row.model;
      j["claim"] = row.claim;
      j["scanned"] = row.scanned;
      j["exhaustive"] = row.exhaustive;
      j["margin"] = row.margin;
      j["status"] = row.status;
      j["violations"] = row.violations;
      jr["rows"].push_back(std::move(j));
    }
    doc["suites"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::string report_summary(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const SuiteReport& rep : reports) {
    int pass = 0, marginal = 0, skip = 0, fail = 0;
    for (const ScanRow& row : rep.rows) {
      if (row.status == "pass") ++pass;
      else if (row.status == "marginal") ++marginal;
      else if (row.status == "skip") ++skip;
      else ++fail;
    }
    out << "suite " << rep.suite << ": " << rep.rows.size() << " rows, " << pass << " pass, "
        << marginal << " marginal, " << skip << " skip, " << fail << " fail\n";
    for (const ScanRow& row : rep.rows) {
      if (!row.failed()) continue;
      out << "  FAIL " << row.graph << " / " << row.model << " / " << row.claim << "\n";
      for (const std::string& v : row.violations) out << "    " << v << "\n";
    }
  }
  out << (reports_all_pass(reports) ? "ALL SUITES PASS" : "VIOLATIONS PRESENT") << "\n";
  return out.str();
}

std::vector<NamedGraph> catalog_from_names(const std::vector<std::string>& names) {
  std::vector<NamedGraph> out;
  for (const std::string& name : names) out.push_back({name, catalog_graph(name)});
  return out;
}

}  // namespace liftcert
