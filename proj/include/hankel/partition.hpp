#pragma once

// Tiling of the quarter-plane {(m,n) : m >= 0, n >= 1} by anchored
// parallelograms, and the classification of a cell to the unique region
// containing it.
//
// For a generation k >= 0, with alpha_i the members of E'_{k+1}, beta'_i the
// members of F''_k (beta_i = beta'_i + f_{2k}) and gamma_i the members of E'_k:
//
//   U_{k,i} = { f_{2k}   <= n < f_{2k+3},  alpha_i - f_{2k+2} < n+m <= alpha_i }
//   V_{k,i} = { f_{2k}   <= n < f_{2k+2},  beta_i             < n+m <= beta_i + f_{2k+1} }
//   T_{k,i} = { f_{2k+1} <= n < f_{2k+2},  gamma_i - f_{2k}   < n+m <= gamma_i }
//
// Together (over all k, i) these cover every cell except the row n = 1 cells
// with m+1 in E'_0 and the single cell (0,1). The former are absorbed by a
// degenerate k = -1 extension (single-cell regions reported as kind U with
// k = -1, one per member of E'_0); the latter is its own special region.

#include <cstdint>
#include <string>
#include <vector>

#include "hankel/checked.hpp"

namespace hankel::lattice {

enum class region_kind : std::uint8_t { U, V, T, origin };

const char* to_string(region_kind kind);

struct parallelogram {
  region_kind kind;
  i64 k;       // generation; -1 for the degenerate row-1 extension
  i64 index;   // 1-based position of the anchor in its family
  i64 anchor;  // alpha_i (U), beta_i (V), gamma_i (T); 0 for origin

  bool operator==(const parallelogram&) const = default;
};

// Position of a cell within its region. Degenerate single-row (or
// single-column) regions satisfy two row (or diagonal) predicates at once;
// ties resolve bottom-over-top and right-over-left.
enum cell_flags : unsigned {
  cell_interior = 0u,
  cell_bottom = 1u << 0,
  cell_top = 1u << 1,
  cell_left = 1u << 2,
  cell_right = 1u << 3,
};

struct cell_class {
  parallelogram region;
  unsigned flags;

  bool interior() const { return flags == cell_interior; }
};

std::string flags_to_string(unsigned flags);

// The unique region containing (m, n); total for m >= 0, n >= 1 as long as
// the involved f-values are representable (overflow_error beyond).
cell_class classify(i64 m, i64 n);

// True when cell (m, n) lies inside region p.
bool region_contains(const parallelogram& p, i64 m, i64 n);

// Inclusive cell window 0 <= m <= m_max, n_min <= n <= n_max.
struct window {
  i64 m_max;
  i64 n_min;
  i64 n_max;

  bool empty() const { return m_max < 0 || n_max < n_min || n_max < 1; }
  i64 cells() const;
};

struct coverage_anomaly {
  i64 m;
  i64 n;
  int count;  // number of k >= 0 regions covering the cell (1 is normal)

  bool operator==(const coverage_anomaly&) const = default;
};

struct coverage_report {
  window win{0, 1, 0};
  i64 cells = 0;
  i64 covered_once = 0;
  std::vector<coverage_anomaly> anomalies;  // cells with count != 1, sorted by (n, m)

  // True when every anomaly is an expected gap: count 0 at (0,1) or at
  // (m, 1) with m+1 in E'_0 (the cells owned by the k = -1 extension).
  bool anomalies_allowlisted() const;
};

// Exactly-once coverage check by direct enumeration of all k >= 0 regions
// meeting the window. Independent of classify() by construction.
coverage_report verify_partition(const window& win);

// Every region (including k = -1 degenerates) whose cell set meets the
// window, each exactly once, ordered by (kind, k, index).
std::vector<parallelogram> parallelograms_in_window(const window& win);

}  // namespace hankel::lattice
