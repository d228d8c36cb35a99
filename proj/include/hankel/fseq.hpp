#pragma once

// The f-sequence: block lengths of the substitution 1 -> 101, 0 -> 1.
//
//   f_0 = 1, f_1 = 2,
//   f_{2n+2} = f_{2n} + f_{2n+1},
//   f_{2n+3} = f_{2n} + f_{2n+2}.
//
// Equivalently f_{2j} = |tau^j(1)| and f_{2j+1} = |tau^j(10)|. Even-index
// values are odd, odd-index values are even, and residues mod 4 are periodic
// in j with period 4, which lets sign exponents such as (f_{2j}-1)/2 be
// reduced mod 2 without materializing f_{2j} at all.

#include <span>

#include "hankel/checked.hpp"

namespace hankel::seq {

// All values of f representable in int64, in index order. Built once,
// immutable afterwards; safe for concurrent readers.
std::span<const i64> f_table();

// Largest j such that f(j) is representable.
int f_max_index();

// f(j); throws overflow_error naming j when f(j) exceeds the 64-bit range.
i64 f(int j);

// f(j) mod 4 for arbitrarily large j >= 0, via the period-4 residue pattern:
// even index 2j: 1 when j = 0,3 (mod 4), 3 when j = 1,2 (mod 4);
// odd index 2j+1: 2 when j is even, 0 when j is odd.
int f_mod4(i64 j);

// Parity of f_{2j+1}/2 (odd-index values are even, so the half is integral):
// odd exactly when j is even.
int half_fodd_mod2(i64 j);

// Parity of (f_{2j}-1)/2 (even-index values are odd): derived from f mod 4.
int half_feven_minus1_mod2(i64 j);

// f_j / 2 for odd j. Via the table when f_j is representable, otherwise via
// the telescoping identity f_{2k+1}/2 = f_{2k-2} + f_{2k-1}/2, so the half
// remains available one index past f_max_index(); overflow_error beyond.
i64 half_f(i64 odd_index);

}  // namespace hankel::seq
