#pragma once

// Window sweeps: evaluate every cell of a rectangular window through the
// closed form or the oracle, compare grids, and tally cells by region kind.
// Parallel variants fan cells out to OpenMP workers (when compiled in); every
// cell is pure and lands in a preassigned slot, so results are deterministic
// regardless of schedule and bit-identical to the serial reference kernels.

#include <vector>

#include "hankel/checked.hpp"
#include "hankel/oracle.hpp"
#include "hankel/partition.hpp"

namespace hankel::scan {

// Dense value grid over a window (rows n_min..n_max, columns 0..m_max).
struct grid {
  lattice::window win{0, 1, 0};
  std::vector<i64> values;  // index (n - n_min) * (m_max + 1) + m

  i64 at(i64 m, i64 n) const;
};

// Cells by region kind, as classified by the lattice partition.
struct census {
  i64 u = 0;
  i64 v = 0;
  i64 t = 0;
  i64 degenerate = 0;  // k = -1 single-cell regions on the n = 1 row
  i64 origin = 0;

  i64 total() const { return u + v + t + degenerate + origin; }
  bool operator==(const census&) const = default;
};

struct mismatch {
  i64 m;
  i64 n;
  i64 lhs;
  i64 rhs;

  bool operator==(const mismatch&) const = default;
};

struct compare_report {
  i64 cells = 0;
  i64 equal = 0;
  std::vector<mismatch> mismatches;  // sorted by (n, m)
};

// Closed-form values over the window; `parallel` opts into the OpenMP kernel.
grid closed_grid(const lattice::window& win, bool parallel);

// Oracle values over the window by the chosen determinant method.
grid oracle_grid(const lattice::window& win, oracle::method how, bool parallel);

// Region-kind tally of every cell in the window.
census census_of(const lattice::window& win);

// Cell-by-cell comparison; the grids must cover the same window
// (invalid_argument otherwise).
compare_report compare(const grid& lhs, const grid& rhs);

}  // namespace hankel::scan
