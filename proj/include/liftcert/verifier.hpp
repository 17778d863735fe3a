#pragma once
// Certification scans: compare a claimed extremal 2-lift against every (or
// a seeded sample of) 2-lifts, check coefficientwise count domination,
// random-cluster and k-lift bounds, structural identities, chromatic lower
// bounds, and positive edge correlation. Results come back as rows with a
// frozen column set so reports serialize stably.

#include <cstdint>
#include <string>
#include <vector>

#include "liftcert/catalog.hpp"
#include "liftcert/graph.hpp"
#include "liftcert/model.hpp"
#include "liftcert/partition.hpp"
#include "liftcert/scalar.hpp"

namespace liftcert {

struct ScanOptions {
  std::uint64_t exhaustive_limit = std::uint64_t(1) << 20;  // scan all 2^m signings up to here
  int sample_count = 4096;       // signings sampled beyond the limit
  std::uint64_t seed = 0;        // sampling and generator seed
  double float_slack = 1e-9;     // relative slack for float-model comparisons
  PartitionCaps caps{};
};

enum class LiftClaim { UnionMax, CrossMax };

std::string claim_name(LiftClaim c);

// The lift the claim names: all-(+1) for UnionMax, all-(-1) for CrossMax.
Graph claimed_lift(const Graph& g, LiftClaim c);

// One verification result. status is "pass", "marginal" (a float pass that
// needed the slack), "fail", or "skip" (beyond caps / not applicable);
// violations is nonempty exactly when status is "fail". margin is the
// claimed value minus the best rival, as a double; 0 when nothing rivals.
struct ScanRow {
  std::string suite;
  std::string graph;
  std::string model;
  std::string claim;
  std::uint64_t scanned = 0;
  bool exhaustive = true;
  double margin = 0.0;
  std::string status = "pass";
  std::vector<std::string> violations;

  bool failed() const { return status == "fail"; }
};

// Scans 2-lifts of g and checks Z(claimed) >= Z(H) for every scanned H.
// Exhaustive when 2^m <= exhaustive_limit, else sample_count seeded
// signings. Exact models compare exactly; float models get float_slack.
// A partition cap hit aborts (CapExceeded) naming the offending signing.
ScanRow verify_two_lift_extremal(const Graph& g, const SpinModel& m, LiftClaim claim,
                                 const ScanOptions& opt = {},
                                 const std::string& graph_label = "g",
                                 const std::string& model_label = "model");

// Independent-set and matching counts of every 2-lift vs the all-crossed
// lift, coefficient by coefficient (exact integers). Exhaustive only; two
// rows (independent_sets, matchings).
std::vector<ScanRow> verify_counts(const Graph& g, const ScanOptions& opt = {},
                                   const std::string& graph_label = "g");

// Random-cluster union claim Z(G u G, q, w) >= Z(H, q, w) over an evaluation
// grid; requires q >= 1 and w >= 0 per point. One row per grid point.
std::vector<ScanRow> verify_tutte_lifts(const Graph& g, const std::vector<RCParams>& grid,
                                        const ScanOptions& opt = {},
                                        const std::string& graph_label = "g");

// random_cluster(g, q, w) == partition_value(g, potts(q, w)); q integer,
// w exact.
ScanRow verify_rc_potts(const Graph& g, int q, const Scalar& w, const ScanOptions& opt = {},
                        const std::string& graph_label = "g");

// Z(H, q, w) <= Z(G, q, w)^k over `samples` seeded k-lifts H; k = 1 demands
// equality.
ScanRow verify_klift_potts(const Graph& g, int k, const RCParams& p, int samples,
                           const ScanOptions& opt = {}, const std::string& graph_label = "g");

// Structural identities over the catalog, exact: tensor multiplicativity,
// the power law hom(G x G', H) = hom(G, H^G'), looped-target restriction
// hom(G with loops, H) = hom(G, looped part of H), subdivision vs matrix
// square, weight blow-up, and the looped square root of the one-safe-state
// pair construction. Pairs beyond caps are reported as "skip".
std::vector<ScanRow> verify_identity_suite(const std::vector<NamedGraph>& catalog,
                                           const ScanOptions& opt = {});

// hom(G, K_q) >= q^v ((q-1)/q)^e for bipartite catalog graphs, exact.
std::vector<ScanRow> verify_coloring_bound(const std::vector<NamedGraph>& catalog,
                                           const std::vector<int>& qs,
                                           const ScanOptions& opt = {});

// Positive correlation of two edge indicators in the random-cluster measure
// on `graphs` seeded multigraphs (n <= 6, m <= 8, at least two edges), for
// (q, w) in {1,2,3} x {1/2,1,2}, exact. One row per graph.
std::vector<ScanRow> verify_fkg(int graphs, const ScanOptions& opt = {});

struct SuiteReport {
  std::string suite;
  std::vector<ScanRow> rows;
  bool all_pass = true;  // no row failed
};

// Suite names: lifts, counts, tutte, klift, identities, coloring, fkg,
// all (= every suite above), explore (seeded random float models on
// bipartite bases; outcomes reported, not presumed; not part of "all").
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, const std::vector<NamedGraph>& catalog,
                      const ScanOptions& opt = {});

// run_suite over "all": lifts, counts, tutte, klift, identities, coloring,
// fkg, in that order.
std::vector<SuiteReport> run_all(const std::vector<NamedGraph>& catalog,
                                 const ScanOptions& opt = {});

bool reports_all_pass(const std::vector<SuiteReport>& reports);

// CSV with the frozen header suite,graph,model,claim,scanned,exhaustive,
// margin,status (RFC-style quoting when a field contains a comma or quote).
std::string report_csv(const std::vector<SuiteReport>& reports);

// JSON {"all_pass":bool,"suites":[{"suite":...,"all_pass":...,"rows":[...]}]}
// with violations included per row.
std::string report_json(const std::vector<SuiteReport>& reports);

// Per-suite pass/fail tallies plus an overall verdict line.
std::string report_summary(const std::vector<SuiteReport>& reports);

// Catalog file: one entry per line, either a known catalog name or
// "name=<edge list text already loaded by the caller>" resolved by the CLI;
// this helper resolves bare names only.
std::vector<NamedGraph> catalog_from_names(const std::vector<std::string>& names);

}  // namespace liftcert
