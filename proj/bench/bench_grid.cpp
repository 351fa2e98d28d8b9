// Compares the OpenMP grid kernel against the serial reference on the
// workloads the verification layer actually runs: signed-error sweeps,
// the theorem ratio F, and the conjecture profile H's double branch.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ellmean/analysis.hpp"
#include "ellmean/approx.hpp"
#include "ellmean/grid.hpp"

using namespace ellmean;

namespace {

double time_of(const std::function<std::vector<double>()>& run, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    volatile double sink = run().back();
    (void)sink;
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void bench_case(const std::string& name, int n,
                const std::function<double(double)>& f) {
  const std::vector<double> xs = grid::interior(n);
  const double t_ser = time_of([&] { return grid::map_serial(xs, f); }, 3);
  const double t_par = time_of([&] { return grid::map(xs, f); }, 3);

  const auto a = grid::map_serial(xs, f);
  const auto b = grid::map(xs, f);
  bool equal = a.size() == b.size();
  for (std::size_t i = 0; equal && i < a.size(); ++i) equal = a[i] == b[i];

  std::printf("%-28s n=%-7d serial %8.2f ms   omp %8.2f ms   speedup %5.2fx   bitwise %s\n",
              name.c_str(), n, t_ser * 1e3, t_par * 1e3, t_ser / t_par,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both kernels run serially\n");
#endif

  bench_case("signed_error A5", 200000, [](double r) {
    return signed_error(ApproxId::A5, Modulus::from_r(r));
  });
  bench_case("signed_error A8", 200000, [](double r) {
    return signed_error(ApproxId::A8, Modulus::from_r(r));
  });
  bench_case("ratio_F", 20000, [](double r) { return ratio_F(Modulus::from_r(r)); });
  bench_case("ratio_R p=7/4", 50000,
             [](double r) { return ratio_R(1.75, Modulus::from_r(r)); });
  return 0;
}
