// Throughput comparison of the OpenMP kernels against their serial
// references: grid feasibility scan, exercise search, prbox_mix sweep.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chshkit/completion.hpp"
#include "chshkit/generators.hpp"
#include "chshkit/reference.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto t0 = clock_type::now();
  fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial,
              parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif

  const chsh::CorrelationBlock block = chsh::random_block(7, chsh::BlockSampling::Cube);

  double serial_value = 0.0;
  double parallel_value = 0.0;
  const double grid_serial = time_seconds(
      [&] { serial_value = chsh::reference::grid_max_min_eigenvalue(block, 0.01); });
  const double grid_parallel =
      time_seconds([&] { parallel_value = chsh::grid_max_min_eigenvalue(block, 0.01); });
  report("grid_max (step 0.01)", grid_serial, grid_parallel);
  if (serial_value != parallel_value) {
    std::printf("MISMATCH: serial %.17g vs parallel %.17g\n", serial_value, parallel_value);
    return 1;
  }

  constexpr std::uint64_t kSamples = 2000000;
  chsh::ExerciseResult ser_ex = chsh::reference::exercise_search(1, 1);
  chsh::ExerciseResult par_ex = ser_ex;
  const double ex_serial =
      time_seconds([&] { ser_ex = chsh::reference::exercise_search(kSamples, 42); });
  const double ex_parallel =
      time_seconds([&] { par_ex = chsh::exercise_search(kSamples, 42); });
  report("exercise_search (2e6)", ex_serial, ex_parallel);
  if (ser_ex.best_index != par_ex.best_index || ser_ex.b_value != par_ex.b_value) {
    std::printf("MISMATCH: serial idx %llu vs parallel idx %llu\n",
                static_cast<unsigned long long>(ser_ex.best_index),
                static_cast<unsigned long long>(par_ex.best_index));
    return 1;
  }

  std::vector<chsh::ScanRow> ser_rows;
  std::vector<chsh::ScanRow> par_rows;
  const double scan_serial =
      time_seconds([&] { ser_rows = chsh::reference::scan_prbox_mix(201); });
  const double scan_parallel = time_seconds([&] { par_rows = chsh::scan_prbox_mix(201); });
  report("scan_prbox_mix (201)", scan_serial, scan_parallel);
  for (std::size_t i = 0; i < ser_rows.size(); ++i) {
    if (ser_rows[i].lambda_star != par_rows[i].lambda_star ||
        ser_rows[i].feasible != par_rows[i].feasible) {
      std::printf("MISMATCH at scan row %zu\n", i);
      return 1;
    }
  }

  std::printf("all kernel results match their serial references\n");
  return 0;
}
