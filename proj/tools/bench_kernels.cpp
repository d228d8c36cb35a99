// Benchmark of the window kernels: the OpenMP sweeps against the serial
// reference implementations, verifying bit-identical grids while timing both.
// Also reports a closed-form vs oracle throughput line for the same window.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "hankel/scan.hpp"

namespace {

using hankel::i64;
using clock_type = std::chrono::steady_clock;

template <typename Fn>
double seconds(Fn fn) {
  const auto start = clock_type::now();
  fn();
  const auto stop = clock_type::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP window-kernel benchmark"};
  i64 m_max = 400, n_max = 120;
  i64 oracle_mmax = 40, oracle_nmax = 30;
  int reps = 3;
  app.add_option("--mmax", m_max, "closed-form window: 0 <= m <= mmax");
  app.add_option("--nmax", n_max, "closed-form window: 1 <= n <= nmax");
  app.add_option("--oracle-mmax", oracle_mmax, "oracle window bound");
  app.add_option("--oracle-nmax", oracle_nmax, "oracle window bound");
  app.add_option("--reps", reps, "repetitions (best-of)")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "threads=" << omp_get_max_threads() << "\n";
#else
  std::cout << "threads=1 (built without OpenMP)\n";
#endif

  const hankel::lattice::window closed_win{m_max, 1, n_max};
  const hankel::lattice::window oracle_win{oracle_mmax, 1, oracle_nmax};

  hankel::scan::closed_grid(closed_win, false);  // warm family caches

  double closed_serial = 1e300, closed_parallel = 1e300;
  hankel::scan::grid ref, par;
  for (int rep = 0; rep < reps; ++rep) {
    closed_serial = std::min(
        closed_serial,
        seconds([&] { ref = hankel::scan::closed_grid(closed_win, false); }));
    closed_parallel = std::min(
        closed_parallel,
        seconds([&] { par = hankel::scan::closed_grid(closed_win, true); }));
  }
  const bool closed_match = ref.values == par.values;
  std::cout << "closed_grid window=" << m_max << "x" << n_max
            << " serial_s=" << closed_serial
            << " parallel_s=" << closed_parallel
            << " speedup=" << closed_serial / closed_parallel
            << " identical=" << (closed_match ? "yes" : "no") << "\n";

  double oracle_serial = 1e300, oracle_parallel = 1e300;
  hankel::scan::grid oref, opar;
  for (int rep = 0; rep < reps; ++rep) {
    oracle_serial =
        std::min(oracle_serial, seconds([&] {
                   oref = hankel::scan::oracle_grid(
                       oracle_win, hankel::oracle::method::crt, false);
                 }));
    oracle_parallel =
        std::min(oracle_parallel, seconds([&] {
                   opar = hankel::scan::oracle_grid(
                       oracle_win, hankel::oracle::method::crt, true);
                 }));
  }
  const bool oracle_match = oref.values == opar.values;
  std::cout << "oracle_grid window=" << oracle_mmax << "x" << oracle_nmax
            << " serial_s=" << oracle_serial
            << " parallel_s=" << oracle_parallel
            << " speedup=" << oracle_serial / oracle_parallel
            << " identical=" << (oracle_match ? "yes" : "no") << "\n";

  const auto closed_on_oracle_win =
      hankel::scan::closed_grid(oracle_win, false);
  const auto cmp = hankel::scan::compare(closed_on_oracle_win, oref);
  std::cout << "closed_vs_oracle cells=" << cmp.cells
            << " mismatches=" << cmp.mismatches.size() << "\n";

  return (closed_match && oracle_match && cmp.mismatches.empty()) ? 0 : 1;
}
