// Compares the serial reference sweep with the OpenMP one over the
// verification grid.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "a3/classify.hpp"

namespace {

double run(a3::Execution how, const a3::GridBounds& bounds, long long* failures) {
  auto start = std::chrono::steady_clock::now();
  auto report = a3::verify_counts(bounds, how);
  auto stop = std::chrono::steady_clock::now();
  *failures = static_cast<long long>(report.failures.size());
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  a3::GridBounds small;  // the default acceptance grid
  a3::GridBounds large{-12, 16, -12, 12, -12, 12};

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  for (const auto& [name, bounds] : {std::pair{"default grid", small},
                                     std::pair{"large grid", large}}) {
    long long fail_s = 0, fail_p = 0;
    double serial = run(a3::Execution::serial, bounds, &fail_s);
    double parallel = run(a3::Execution::parallel, bounds, &fail_p);
    std::printf("%-12s  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   failures %lld/%lld\n",
                name, serial, parallel, serial / parallel, fail_s, fail_p);
    if (fail_s != fail_p) {
      std::printf("serial/parallel disagree!\n");
      return 1;
    }
  }
  return 0;
}
