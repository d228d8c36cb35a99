#pragma once

// Closed-form evaluation of the Hankel determinant H_{m,n} of the Sturmian
// fixed point of 1 -> 101, 0 -> 1: classify (m, n) to its region, then apply
// the region's formula. Every value is one of
//
//   0, +-f_{2k+1}/2 (U and V regions), +-f_{2k} (T regions), 1 (origin),
//
// so evaluation costs a classification plus O(1) parity arithmetic; sign
// exponents are reduced mod 2 through the period-4 residues of the f-sequence
// rather than materialized.

#include "hankel/checked.hpp"
#include "hankel/partition.hpp"

namespace hankel::closed {

// H_{m,n}; m >= 0, n >= 1 (domain_error otherwise, overflow_error when the
// classification would need f-values beyond the 64-bit range).
i64 eval(i64 m, i64 n);

// Same, for an already-classified cell. cls must be classify(m, n).
i64 eval(const lattice::cell_class& cls, i64 m, i64 n);

// Per-region formulas. The cell must lie inside the given region and the
// region must be of the matching kind (domain_error otherwise); eval_u
// additionally requires generation k >= 0 (degenerate k = -1 cells are
// handled by eval's dispatch, which scores them 0).
i64 eval_u(const lattice::parallelogram& region, i64 m, i64 n);
i64 eval_v(const lattice::parallelogram& region, i64 m, i64 n);
i64 eval_t(const lattice::parallelogram& region, i64 m, i64 n);

}  // namespace hankel::closed
