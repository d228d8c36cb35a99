#include "hankel/criteria.hpp"

#include <optional>
#include <stdexcept>

#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"

namespace hankel::seq {

namespace {

// f_{2k+1}/2 when it is representable, nullopt otherwise. One index past the
// table the half-value may still fit, via f_{2k+1}/2 = f_{2k-2} + f_{2k-1}/2.
std::optional<i64> half_fodd(i64 k) {
  if (2 * k + 1 <= f_max_index()) return f(static_cast<int>(2 * k + 1)) / 2;
  if (k >= 1 && 2 * k - 1 <= f_max_index()) {
    i64 r;
    if (!__builtin_add_overflow(f(static_cast<int>(2 * k - 2)),
                                f(static_cast<int>(2 * k - 1)) / 2, &r))
      return r;
  }
  return std::nullopt;
}

}  // namespace

std::uint8_t s_at(i64 n) { return f_rep::encode(n).digit(0) ? 0 : 1; }

bool shift_even_differs(i64 n, i64 k) {
  if (n < 0) throw std::invalid_argument("shift_even_differs: negative n");
  if (k < 0) throw std::invalid_argument("shift_even_differs: negative k");
  // phi_k(n) <= n, so an unrepresentable threshold is simply unreachable.
  const auto half = half_fodd(k);
  if (!half) return false;
  const i64 p = phi(k, n);
  return p == *half || p == *half - 1;
}

bool shift_odd_differs(i64 n, i64 k) {
  if (n < 0) throw std::invalid_argument("shift_odd_differs: negative n");
  if (k < 1)
    throw std::domain_error("shift_odd_differs: defined for k >= 1 only");
  const auto half_next = half_fodd(k + 1);  // f_{2k+3}/2
  if (!half_next || 2 * k > f_max_index()) return false;
  const i64 half = *half_next;
  const i64 low = f(static_cast<int>(2 * k));
  const i64 p = phi(k, n);
  if (p == half || p == half - 1) return true;
  i64 shifted = 0;
  if (__builtin_add_overflow(half, low, &shifted)) return false;
  return p == shifted || p == shifted - 1;
}

std::pair<std::uint8_t, std::uint8_t> s_at_half(i64 k) {
  if (k < 0) throw std::invalid_argument("s_at_half: negative k");
  if (2 * k + 1 > f_max_index())
    throw overflow_error("s_at_half: f_{2k+1} exceeds the 64-bit range");
  const i64 half = f(static_cast<int>(2 * k + 1)) / 2;
  return {s_at(half), s_at(half - 1)};
}

}  // namespace hankel::seq
