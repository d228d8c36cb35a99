#include "hankel/closed_form.hpp"

#include <stdexcept>
#include <string>

#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"

namespace hankel::closed {

namespace {

using lattice::parallelogram;
using lattice::region_kind;

i64 fv(i64 j) { return seq::f(static_cast<int>(j)); }

// Parities of the triangular exponents r(r-1)/2 and r(r+1)/2, r >= 0.
int tri_lo_mod2(i64 r) {
  const int t = static_cast<int>(r % 4);
  return (t == 2 || t == 3) ? 1 : 0;
}
int tri_hi_mod2(i64 r) {
  const int t = static_cast<int>(r % 4);
  return (t == 1 || t == 2) ? 1 : 0;
}

i64 apply_sign(i64 exponent, i64 magnitude) {
  return (exponent % 2 != 0) ? -magnitude : magnitude;
}

// Parity of (f_{2k+2} + f_{2k+1} - 3)/2, the top-row exponent of V regions,
// rewritten as (f_{2k+2}-1)/2 + f_{2k+1}/2 - 1 so each term has a period-4
// closed form.
int v_top_exponent_mod2(i64 k) {
  return (seq::half_feven_minus1_mod2(k + 1) + seq::half_fodd_mod2(k) + 1) % 2;
}

void require_inside(const parallelogram& p, region_kind kind, i64 m, i64 n,
                    const char* what) {
  if (p.kind != kind)
    throw std::domain_error(std::string(what) + ": region kind mismatch");
  if (!lattice::region_contains(p, m, n))
    throw std::domain_error(std::string(what) + ": cell outside region");
}

}  // namespace

i64 eval_u(const parallelogram& region, i64 m, i64 n) {
  require_inside(region, region_kind::U, m, n, "eval_u");
  if (region.k < 0)
    throw std::domain_error("eval_u: degenerate extension has no generation");
  const i64 k = region.k;
  const i64 d = m + n;
  const i64 magnitude = seq::half_f(2 * k + 1);
  if (n == fv(2 * k + 3) - 1)  // top row: sign tracks phi_{k+1} of the diagonal
    return apply_sign(
        (k + 1) + seq::half_fodd_mod2(k + 2) + seq::phi(k + 1, d), magnitude);
  if (n == fv(2 * k))  // bottom row: constant along the row
    return apply_sign((k + 1) + seq::half_feven_minus1_mod2(k + 1), magnitude);
  if (d == region.anchor || d == region.anchor - fv(2 * k + 2) + 1) {
    const i64 r = fv(2 * k + 3) - 1 - n;
    return apply_sign((r % 2) * (k % 2) + tri_lo_mod2(r) + k + 1, magnitude);
  }
  return 0;
}

i64 eval_v(const parallelogram& region, i64 m, i64 n) {
  require_inside(region, region_kind::V, m, n, "eval_v");
  const i64 k = region.k;
  const i64 d = m + n;
  const i64 magnitude = seq::half_f(2 * k + 1);
  if (n == fv(2 * k + 2) - 1)  // top row: constant along the row
    return apply_sign(v_top_exponent_mod2(k), magnitude);
  if (n == fv(2 * k))  // bottom row: same constant as U bottoms
    return apply_sign((k + 1) + seq::half_feven_minus1_mod2(k + 1), magnitude);
  if (d == region.anchor + 1 || d == region.anchor + fv(2 * k + 1)) {
    const i64 r = fv(2 * k + 2) - 1 - n;
    return apply_sign((r % 2) * (k % 2) + tri_hi_mod2(r) + v_top_exponent_mod2(k),
                      magnitude);
  }
  return 0;
}

i64 eval_t(const parallelogram& region, i64 m, i64 n) {
  require_inside(region, region_kind::T, m, n, "eval_t");
  const i64 k = region.k;
  const i64 d = m + n;
  const i64 magnitude = fv(2 * k);
  if (n == fv(2 * k + 2) - 1)  // top row (coincides with the bottom at k = 0)
    return apply_sign(seq::half_feven_minus1_mod2(k), magnitude);
  if (n == fv(2 * k + 1))  // bottom row: alternates with the diagonal's phi_k
    return apply_sign(seq::phi(k, d) + seq::half_fodd_mod2(k) + 1, magnitude);
  if (d == region.anchor || d == region.anchor - fv(2 * k) + 1) {
    const i64 r = fv(2 * k + 2) - 1 - n;
    return apply_sign(
        (r % 2) * (k % 2) + tri_lo_mod2(r) + seq::half_feven_minus1_mod2(k),
        magnitude);
  }
  return 0;
}

i64 eval(const lattice::cell_class& cls, i64 m, i64 n) {
  const parallelogram& p = cls.region;
  switch (p.kind) {
    case region_kind::origin:
      return 1;
    case region_kind::U:
      return p.k < 0 ? 0 : eval_u(p, m, n);
    case region_kind::V:
      return eval_v(p, m, n);
    case region_kind::T:
      return eval_t(p, m, n);
  }
  throw std::logic_error("eval: unknown region kind");
}

i64 eval(i64 m, i64 n) {
  if (m < 0 || n < 1)
    throw std::domain_error("eval: requires m >= 0 and n >= 1");
  return eval(lattice::classify(m, n), m, n);
}

}  // namespace hankel::closed
