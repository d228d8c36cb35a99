#pragma once

// f-representation of nonnegative integers: every n >= 0 has a unique digit
// vector (a_i) with a_i in {0,1} and n = sum a_i * f_i, subject to
//
//   a_i * a_{i+1} = 0            (no two adjacent digits), and
//   a_i * a_{i+2} = 0 for even i (no even-index digit followed two later).
//
// encode() produces the canonical digits greedily from the largest fitting
// f_i; phi(k, n) truncates the expansion to indices <= 2k+2.

#include <cstdint>
#include <span>
#include <vector>

#include "hankel/checked.hpp"

namespace hankel::seq {

// Outcome of checking a raw digit vector against the two digit constraints.
struct digit_violation {
  bool ok;
  int index;            // lowest index of the violated pair (-1 when ok)
  const char* rule;     // human-readable constraint name ("" when ok)
};

digit_violation validate(std::span<const std::uint8_t> digits);

class f_rep {
 public:
  // Canonical digits of n (n >= 0; throws std::invalid_argument otherwise).
  static f_rep encode(i64 n);

  // Wrap raw digits without validating; decode() will check them.
  static f_rep from_digits(std::vector<std::uint8_t> digits);

  // Value of the digit vector; throws std::domain_error naming the violated
  // constraint when the digits are not a valid representation.
  i64 decode() const;

  bool digit(i64 i) const;       // a_i (0 beyond the stored width)
  int top() const;               // highest set index, -1 for n = 0
  std::span<const std::uint8_t> digits() const { return digits_; }

 private:
  std::vector<std::uint8_t> digits_;  // digits_[i] = a_i
};

// Truncated value  phi_k(n) = sum_{i <= 2k+2} a_i(n) f_i  for k >= 0.
// Total for any representable n; k may exceed the width of n's digits.
i64 phi(i64 k, i64 n);

}  // namespace hankel::seq
