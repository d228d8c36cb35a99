#include "hankel/frep.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hankel/fseq.hpp"

namespace hankel::seq {

digit_violation validate(std::span<const std::uint8_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 1)
      return {false, static_cast<int>(i), "digit outside {0,1}"};
    if (i + 1 < digits.size() && digits[i] && digits[i + 1])
      return {false, static_cast<int>(i), "adjacent digits both set"};
    if (i % 2 == 0 && i + 2 < digits.size() && digits[i] && digits[i + 2])
      return {false, static_cast<int>(i), "even-index digit pair a_i, a_{i+2} both set"};
  }
  return {true, -1, ""};
}

f_rep f_rep::encode(i64 n) {
  if (n < 0) throw std::invalid_argument("f_rep::encode: negative value");
  f_rep rep;
  if (n == 0) return rep;
  const auto table = f_table();
  int j = static_cast<int>(std::upper_bound(table.begin(), table.end(), n) - table.begin()) - 1;
  rep.digits_.assign(static_cast<std::size_t>(j) + 1, 0);
  i64 rem = n;
  int prev = -1;  // index of the most recently taken digit
  while (rem > 0) {
    while (j >= 0 && table[j] > rem) --j;
    // Greedy is safe: any valid combination of digits below j sums to < f_j,
    // so skipping a fitting f_j can never be recovered.
    if (j < 0 || (prev != -1 && (prev - j == 1 || (prev - j == 2 && j % 2 == 0))))
      throw std::logic_error("f_rep::encode: greedy descent stuck (table exhausted)");
    rep.digits_[static_cast<std::size_t>(j)] = 1;
    rem -= table[j];
    prev = j;
    --j;
  }
  return rep;
}

f_rep f_rep::from_digits(std::vector<std::uint8_t> digits) {
  f_rep rep;
  rep.digits_ = std::move(digits);
  return rep;
}

i64 f_rep::decode() const {
  const auto bad = validate(digits_);
  if (!bad.ok)
    throw std::domain_error("f_rep::decode: invalid digits at index " +
                            std::to_string(bad.index) + ": " + bad.rule);
  i64 value = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i]) value = checked_add(value, f(static_cast<int>(i)), "f_rep::decode");
  return value;
}

bool f_rep::digit(i64 i) const {
  return i >= 0 && i < static_cast<i64>(digits_.size()) && digits_[static_cast<std::size_t>(i)];
}

int f_rep::top() const {
  for (std::size_t i = digits_.size(); i-- > 0;)
    if (digits_[i]) return static_cast<int>(i);
  return -1;
}

i64 phi(i64 k, i64 n) {
  if (k < 0) throw std::invalid_argument("phi: negative k");
  const f_rep rep = f_rep::encode(n);
  const i64 cut = 2 * k + 2;
  i64 value = 0;
  for (int i = 0; i <= rep.top(); ++i)
    if (i <= cut && rep.digit(i)) value += f(i);  // bounded by n, no overflow
  return value;
}

}  // namespace hankel::seq
