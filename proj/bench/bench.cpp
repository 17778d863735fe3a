// Timing comparison between the parallel kernels and the serial reference
// implementations on a few catalog workloads. Build and run manually:
//
//   cmake --build build --target liftcert_bench
//   ./build/liftcert_bench
//
// Each row times the optimized kernel (all threads, then pinned to one
// thread) against the unpruned serial oracle and checks they agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftcert/catalog.hpp"
#include "liftcert/model.hpp"
#include "liftcert/partition.hpp"
#include "liftcert/reference.hpp"
#include "liftcert/verifier.hpp"

using namespace liftcert;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int t) {
#ifdef _OPENMP
  omp_set_num_threads(t);
#else
  (void)t;
#endif
}

}  // namespace

int main() {
  struct Row {
    std::string label;
    std::function<void()> kernel;
    std::function<void()> reference;
  };

  Graph c12 = catalog_graph("c12");
  Graph petersen = catalog_graph("petersen");
  Graph k33 = catalog_graph("k33");
  SpinModel potts3 = potts_model(3, Scalar(1));
  SpinModel wr = wr_model();
  SpinModel ising = ising_model(0.5, 0.2);
  Graph big = disjoint_union(c12, c12);
  RCParams rc{Scalar::parse_exact("3/2"), Scalar::parse_exact("1/2")};

  Scalar sink;
  std::vector<Row> rows = {
      {"Z(c12, 3-state unit)",
       [&] { sink = partition_value(c12, potts3); },
       [&] { sink = z_enumeration(c12, potts3); }},
      {"Z(petersen, wr)",
       [&] { sink = partition_value(petersen, wr); },
       [&] { sink = z_enumeration(petersen, wr); }},
      {"Z(2 x c12, ising(0.5,0.2))",
       [&] { sink = partition_value(big, ising); },
       [&] { sink = z_enumeration(big, ising, 20000000); }},
      {"cluster Z(petersen, 3/2, 1/2)",
       [&] { sink = random_cluster(petersen, rc); },
       [&] { sink = random_cluster_subsets(petersen, rc); }},
      {"lift scan (k33, ind)",
       [&] { verify_two_lift_extremal(k33, ind_model(), LiftClaim::CrossMax); },
       [&] {
         // Reference: the same scan pinned to one thread.
         int t = max_threads();
         set_threads(1);
         verify_two_lift_extremal(k33, ind_model(), LiftClaim::CrossMax);
         set_threads(t);
       }},
  };

  std::printf("threads: %d\n", max_threads());
  std::printf("%-32s %12s %12s %9s\n", "case", "kernel (s)", "serial (s)", "ratio");
  for (const Row& row : rows) {
    double k = seconds(row.kernel);
    Scalar kernel_value = sink;
    double r = seconds(row.reference);
    bool agree = true;
    if (kernel_value.is_exact() && sink.is_exact()) agree = kernel_value == sink;
    std::printf("%-32s %12.3f %12.3f %8.2fx%s\n", row.label.c_str(), k, r,
                k > 0 ? r / k : 0.0, agree ? "" : "  DISAGREE");
  }
  return 0;
}
