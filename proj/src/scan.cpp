#include "hankel/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "hankel/closed_form.hpp"
#include "hankel/word.hpp"

namespace hankel::scan {

namespace {

// Runs fn(m, n, slot) over every cell, optionally under OpenMP. Exceptions
// are latched and rethrown on the calling thread after the sweep.
template <typename Fn>
void sweep(const lattice::window& win, std::vector<i64>& values, bool parallel,
           Fn fn) {
  const i64 n_lo = std::max<i64>(win.n_min, 1);
  const i64 cols = win.m_max + 1;
  const i64 rows = win.n_max - n_lo + 1;
  const i64 cells = rows * cols;
  values.assign(static_cast<std::size_t>(cells), 0);

  std::exception_ptr first_error;
  std::mutex error_mu;
  std::atomic<bool> failed{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (i64 idx = 0; idx < cells; ++idx) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      const i64 n = n_lo + idx / cols;
      const i64 m = idx % cols;
      values[static_cast<std::size_t>(idx)] = fn(m, n);
    } catch (...) {
      std::scoped_lock lock(error_mu);
      if (!first_error) first_error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  (void)parallel;
}

}  // namespace

i64 grid::at(i64 m, i64 n) const {
  const i64 n_lo = std::max<i64>(win.n_min, 1);
  if (m < 0 || m > win.m_max || n < n_lo || n > win.n_max)
    throw std::out_of_range("grid::at: cell outside the window");
  return values[static_cast<std::size_t>((n - n_lo) * (win.m_max + 1) + m)];
}

grid closed_grid(const lattice::window& win, bool parallel) {
  grid g{win, {}};
  if (win.empty()) return g;
  win.cells();  // overflow check on the extent
  sweep(win, g.values, parallel,
        [](i64 m, i64 n) { return closed::eval(m, n); });
  return g;
}

grid oracle_grid(const lattice::window& win, oracle::method how,
                 bool parallel) {
  grid g{win, {}};
  if (win.empty()) return g;
  win.cells();
  if (how == oracle::method::crt)
    oracle::primes_needed(win.n_max);  // fail fast before the sweep
  // Pre-grow the shared word once so workers never contend on extension.
  seq::word().prefix(checked_add(win.m_max, 2 * win.n_max, "oracle_grid"));
  sweep(win, g.values, parallel,
        [how](i64 m, i64 n) { return oracle::eval(m, n, how); });
  return g;
}

census census_of(const lattice::window& win) {
  census c;
  if (win.empty()) return c;
  const i64 n_lo = std::max<i64>(win.n_min, 1);
  for (i64 n = n_lo; n <= win.n_max; ++n)
    for (i64 m = 0; m <= win.m_max; ++m) {
      const auto cls = lattice::classify(m, n);
      switch (cls.region.kind) {
        case lattice::region_kind::U:
          ++(cls.region.k < 0 ? c.degenerate : c.u);
          break;
        case lattice::region_kind::V:
          ++c.v;
          break;
        case lattice::region_kind::T:
          ++c.t;
          break;
        case lattice::region_kind::origin:
          ++c.origin;
          break;
      }
    }
  return c;
}

compare_report compare(const grid& lhs, const grid& rhs) {
  if (lhs.win.m_max != rhs.win.m_max || lhs.win.n_min != rhs.win.n_min ||
      lhs.win.n_max != rhs.win.n_max)
    throw std::invalid_argument("compare: grids cover different windows");
  compare_report rep;
  rep.cells = static_cast<i64>(lhs.values.size());
  const i64 n_lo = std::max<i64>(lhs.win.n_min, 1);
  const i64 cols = lhs.win.m_max + 1;
  for (i64 idx = 0; idx < rep.cells; ++idx) {
    const i64 a = lhs.values[static_cast<std::size_t>(idx)];
    const i64 b = rhs.values[static_cast<std::size_t>(idx)];
    if (a == b) {
      ++rep.equal;
    } else {
      rep.mismatches.push_back({idx % cols, n_lo + idx / cols, a, b});
    }
  }
  return rep;
}

}  // namespace hankel::scan
