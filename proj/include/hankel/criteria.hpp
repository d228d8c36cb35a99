#pragma once

// Symbol access and shift-comparison criteria driven by the f-representation
// (the numeration route, as opposed to the substitution route in word.hpp):
//
//   s_n = 0  iff  a_0(n) = 1;
//   s_{n + f_{2k}} != s_n      iff  phi_k(n) in { f_{2k+1}/2, f_{2k+1}/2 - 1 };
//   s_{n + f_{2k+1}} != s_n    iff  phi_k(n) in { f_{2k+3}/2, f_{2k+3}/2 - 1,
//                                                 f_{2k+3}/2 + f_{2k},
//                                                 f_{2k+3}/2 + f_{2k} - 1 }   (k >= 1).
//
// The two routes are cross-checked against each other in the test suite.

#include <cstdint>
#include <utility>

#include "hankel/checked.hpp"

namespace hankel::seq {

// s_n via the lowest digit of n's f-representation.
std::uint8_t s_at(i64 n);

// Whether shifting by the even-index block length f_{2k} flips the symbol.
bool shift_even_differs(i64 n, i64 k);

// Whether shifting by the odd-index block length f_{2k+1} flips the symbol.
// Defined for k >= 1 only; k = 0 throws std::domain_error (the criterion
// list above genuinely does not cover f_1).
bool shift_odd_differs(i64 n, i64 k);

// The symbol pair (s_{f_{2k+1}/2}, s_{f_{2k+1}/2 - 1}):
// (1,0) for odd k, (0,1) for even k.
std::pair<std::uint8_t, std::uint8_t> s_at_half(i64 k);

}  // namespace hankel::seq
