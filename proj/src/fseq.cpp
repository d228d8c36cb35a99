#include "hankel/fseq.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hankel::seq {

namespace {

std::vector<i64> build_table() {
  std::vector<i64> t{1, 2};
  for (;;) {
    const std::size_t j = t.size();
    i64 next;
    // f_{2n+2} = f_{2n} + f_{2n+1} (j even), f_{2n+3} = f_{2n} + f_{2n+2} (j odd)
    const i64 a = (j % 2 == 0) ? t[j - 2] : t[j - 3];
    if (__builtin_add_overflow(a, t[j - 1], &next)) break;
    t.push_back(next);
  }
  return t;
}

}  // namespace

std::span<const i64> f_table() {
  static const std::vector<i64> table = build_table();
  return table;
}

int f_max_index() { return static_cast<int>(f_table().size()) - 1; }

i64 f(int j) {
  if (j < 0) throw std::invalid_argument("f: negative index");
  const auto t = f_table();
  if (static_cast<std::size_t>(j) >= t.size())
    throw overflow_error("f(" + std::to_string(j) + ") exceeds the 64-bit range");
  return t[j];
}

int f_mod4(i64 j) {
  if (j < 0) throw std::invalid_argument("f_mod4: negative index");
  if (j % 2 == 0) {
    const i64 h = (j / 2) % 4;
    return (h == 0 || h == 3) ? 1 : 3;
  }
  return ((j - 1) / 2 % 2 == 0) ? 2 : 0;
}

int half_fodd_mod2(i64 j) { return f_mod4(2 * (j % 4) + 1) / 2; }

i64 half_f(i64 odd_index) {
  if (odd_index < 1 || odd_index % 2 == 0)
    throw std::invalid_argument("half_f: index must be odd and positive");
  if (odd_index <= f_max_index()) return f(static_cast<int>(odd_index)) / 2;
  if (odd_index - 3 > f_max_index())
    throw overflow_error("half_f(" + std::to_string(odd_index) +
                         ") exceeds the 64-bit range");
  // f_{2k+1}/2 = f_{2k-2} + f_{2k-1}/2, recursing on the (odd) second term.
  return checked_add(f(static_cast<int>(odd_index - 3)), half_f(odd_index - 2),
                     "half_f");
}

int half_feven_minus1_mod2(i64 j) { return (f_mod4(2 * (j % 4)) - 1) / 2; }

}  // namespace hankel::seq
