#pragma once

// Independent ground truth for the closed form: build the Hankel matrix
// M_{m,n} = (s_{m+i+j}) directly from the substitution-generated word and
// compute its determinant exactly. This module deliberately depends only on
// the word (never on the numeration system, the anchor families, or the
// classification), so agreement with the closed form is a genuine cross-check
// of two unrelated computations.
//
// Two determinant paths:
//   - det_bareiss: fraction-free elimination over arbitrary-precision
//     integers. Slow, unconditionally sound; the reference.
//   - det_crt: elimination modulo a deterministic selection from a fixed pool
//     of 31-bit primes, recombined by Chinese remaindering with symmetric
//     lifting. The selection always satisfies (product of primes)^2 > 4 n^n,
//     i.e. product > 2 n^{n/2}, twice the Hadamard bound for 0/1 matrices,
//     so the lift is exact without assuming anything about the word.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hankel/checked.hpp"

namespace hankel::oracle {

enum class method { bareiss, crt };

const char* to_string(method how);

// The (m,n)-order Hankel matrix, stored as its defining strip
// s_m, ..., s_{m+2n-2}; entry(i,j) = strip[i+j] is constant along
// anti-diagonals by construction.
class hankel_matrix {
 public:
  hankel_matrix(i64 m, i64 n);  // m >= 0, n >= 1; domain_error otherwise

  i64 base() const { return m_; }
  i64 order() const { return n_; }
  int entry(i64 i, i64 j) const;  // s_{m+i+j}, 0 <= i,j < n
  std::span<const std::uint8_t> strip() const { return strip_; }

 private:
  i64 m_;
  i64 n_;
  std::vector<std::uint8_t> strip_;
};

// Exact determinant by fraction-free elimination; overflow_error only if the
// result itself exceeds the 64-bit range (intermediates are unbounded).
i64 det_bareiss(const hankel_matrix& mat);

// Exact determinant by modular elimination + CRT; prime_pool_error when the
// fixed pool cannot certify the order.
i64 det_crt(const hankel_matrix& mat);

i64 eval(i64 m, i64 n, method how);

// The configuration error raised when the fixed prime pool is too small to
// certify a requested order.
class prime_pool_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The fixed pool: the 256 largest primes below 2^31, in descending order.
std::span<const std::uint32_t> prime_pool();

// Number of leading pool primes the CRT path uses for order n: the smallest
// count whose product P satisfies P^2 > 4 n^n, checked in exact arithmetic.
// Throws prime_pool_error when the whole pool is insufficient.
std::size_t primes_needed(i64 n);

}  // namespace hankel::oracle
