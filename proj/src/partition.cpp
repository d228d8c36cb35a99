#include "hankel/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hankel/families.hpp"
#include "hankel/fseq.hpp"

namespace hankel::lattice {

namespace {

i64 fv(i64 j) { return seq::f(static_cast<int>(j)); }

// 1-based position of value in a family; logic_error when absent, since every
// caller has already proved membership from the anchor-gap structure.
i64 position_of(family_kind kind, i64 k, i64 value, const char* what) {
  auto snap = family_snapshot_upto(kind, k, value);
  auto it = std::lower_bound(snap->begin(), snap->end(), value);
  if (it == snap->end() || *it != value)
    throw std::logic_error(std::string("partition: ") + what +
                           " is not a family member");
  return (it - snap->begin()) + 1;
}

// Inclusive row (n) and diagonal (n+m) spans of a region.
struct edges {
  i64 row_lo;
  i64 row_hi;
  i64 diag_lo;
  i64 diag_hi;
};

edges region_edges(const parallelogram& p) {
  switch (p.kind) {
    case region_kind::U:
      if (p.k < 0) return {1, 1, p.anchor, p.anchor};  // single-cell extension
      return {fv(2 * p.k), fv(2 * p.k + 3) - 1, p.anchor - fv(2 * p.k + 2) + 1,
              p.anchor};
    case region_kind::V:
      return {fv(2 * p.k), fv(2 * p.k + 2) - 1, p.anchor + 1,
              p.anchor + fv(2 * p.k + 1)};
    case region_kind::T:
      return {fv(2 * p.k + 1), fv(2 * p.k + 2) - 1, p.anchor - fv(2 * p.k) + 1,
              p.anchor};
    case region_kind::origin:
      return {1, 1, 1, 1};
  }
  throw std::logic_error("partition: unknown region kind");
}

// The else-if pairs canonicalize degenerate regions: a single-row region is
// reported as bottom, a single-diagonal one as right.
unsigned flags_for(const parallelogram& p, i64 m, i64 n) {
  const edges e = region_edges(p);
  const i64 d = m + n;
  unsigned flags = cell_interior;
  if (n == e.row_lo)
    flags |= cell_bottom;
  else if (n == e.row_hi)
    flags |= cell_top;
  if (d == e.diag_hi)
    flags |= cell_right;
  else if (d == e.diag_lo)
    flags |= cell_left;
  return flags;
}

cell_class make_class(parallelogram p, i64 m, i64 n) {
  return {p, flags_for(p, m, n)};
}

}  // namespace

const char* to_string(region_kind kind) {
  switch (kind) {
    case region_kind::U: return "U";
    case region_kind::V: return "V";
    case region_kind::T: return "T";
    case region_kind::origin: return "origin";
  }
  return "?";
}

std::string flags_to_string(unsigned flags) {
  const std::string vertical = (flags & cell_bottom) ? "bottom"
                               : (flags & cell_top)  ? "top"
                                                     : "";
  const std::string horizontal = (flags & cell_right) ? "right"
                                 : (flags & cell_left) ? "left"
                                                       : "";
  if (vertical.empty()) return horizontal.empty() ? "interior" : horizontal;
  return horizontal.empty() ? vertical : vertical + "-" + horizontal;
}

bool region_contains(const parallelogram& p, i64 m, i64 n) {
  if (m < 0 || n < 1) return false;
  const edges e = region_edges(p);
  const i64 d = m + n;
  return e.row_lo <= n && n <= e.row_hi && e.diag_lo <= d && d <= e.diag_hi;
}

cell_class classify(i64 m, i64 n) {
  if (m < 0 || n < 1)
    throw std::domain_error("classify: requires m >= 0 and n >= 1");
  const i64 d = checked_add(m, n, "classify: m + n");
  if (d == 1) return make_class({region_kind::origin, 0, 0, 0}, m, n);

  // Generation band f_{2k} <= n < f_{2k+2}.
  i64 k = 0;
  while (fv(2 * k + 2) <= n) ++k;

  // Smallest E'_k member >= d. Consecutive members differ by at most
  // f_{2k+3}, so a snapshot bounded by d + f_{2k+3} always contains it.
  const i64 bound = checked_add(d, fv(2 * k + 3), "classify: family bound");
  auto anchors = family_snapshot_upto(family_kind::Eprime, k, bound);
  auto it = std::lower_bound(anchors->begin(), anchors->end(), d);
  if (it == anchors->end())
    throw std::logic_error("classify: anchor snapshot ended before diagonal");
  const i64 l = (it - anchors->begin()) + 1;
  const i64 gl = *it;

  if (d > gl - fv(2 * k)) {
    // Within f_{2k} diagonals of the anchor: a U of the previous generation
    // (single-cell extension when k = 0) below row f_{2k+1}, a T above it.
    if (n < fv(2 * k + 1))
      return make_class({region_kind::U, k - 1, l, gl}, m, n);
    return make_class({region_kind::T, k, l, gl}, m, n);
  }

  if (l < 2)
    throw std::logic_error("classify: diagonal below the first anchor");
  const i64 glm1 = *(it - 1);
  const i64 gap = gl - glm1;
  if (gap == fv(2 * k + 2)) {
    // Short anchor gap: the V anchored at beta_i = gamma_{l-1}, whose index
    // is the position of beta_i - f_{2k} in F''_k.
    const i64 i =
        position_of(family_kind::Fdoubleprime, k, glm1 - fv(2 * k), "V anchor");
    return make_class({region_kind::V, k, i, glm1}, m, n);
  }
  if (gap != fv(2 * k + 3))
    throw std::logic_error("classify: unexpected anchor gap");
  // Long anchor gap: the U anchored at alpha_j = gamma_l - f_{2k} in E'_{k+1}.
  const i64 alpha = gl - fv(2 * k);
  const i64 j = position_of(family_kind::Eprime, k + 1, alpha, "U anchor");
  return make_class({region_kind::U, k, j, alpha}, m, n);
}

i64 window::cells() const {
  if (empty()) return 0;
  const i64 n_lo = std::max<i64>(n_min, 1);
  return checked_mul(m_max + 1, n_max - n_lo + 1, "window: cell count");
}

bool coverage_report::anomalies_allowlisted() const {
  for (const coverage_anomaly& a : anomalies) {
    if (a.count != 0 || a.n != 1) return false;
    if (a.m == 0) continue;  // the lone all-ones cell on the first diagonal
    const i64 x = a.m + 1;
    auto snap = family_snapshot_upto(family_kind::Eprime, 0, x);
    if (!std::binary_search(snap->begin(), snap->end(), x)) return false;
  }
  return true;
}

coverage_report verify_partition(const window& win) {
  coverage_report rep;
  rep.win = win;
  if (win.empty()) return rep;
  const i64 n_lo = std::max<i64>(win.n_min, 1);
  const i64 n_hi = win.n_max;
  const i64 cols = checked_add(win.m_max, 1, "verify_partition: columns");
  rep.cells = checked_mul(cols, n_hi - n_lo + 1, "verify_partition: cells");
  if (rep.cells > (i64{1} << 28))
    throw std::invalid_argument("verify_partition: window too large");
  std::vector<int> count(static_cast<std::size_t>(rep.cells), 0);
  const i64 d_max = checked_add(n_hi, win.m_max, "verify_partition: diagonal");

  auto visit = [&](const edges& e) {
    const i64 r_lo = std::max(e.row_lo, n_lo);
    const i64 r_hi = std::min(e.row_hi, n_hi);
    for (i64 n = r_lo; n <= r_hi; ++n) {
      const i64 dlo = std::max(e.diag_lo, n);
      const i64 dhi = std::min(e.diag_hi, n + win.m_max);
      for (i64 d = dlo; d <= dhi; ++d)
        ++count[static_cast<std::size_t>((n - n_lo) * cols + (d - n))];
    }
  };

  // Stamp every k >= 0 region that can meet the window; the snapshots extend
  // one anchor past the last useful one, whose visit intersection is empty.
  for (i64 k = 0;; ++k) {
    if (2 * k > seq::f_max_index() || fv(2 * k) > n_hi) break;
    if (fv(2 * k + 3) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(
          family_kind::Eprime, k + 1,
          checked_add(d_max, fv(2 * k + 2), "verify_partition: U anchors"));
      for (i64 a : *snap)
        visit({fv(2 * k), fv(2 * k + 3) - 1, a - fv(2 * k + 2) + 1, a});
    }
    if (fv(2 * k + 2) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(family_kind::Fdoubleprime, k, d_max);
      for (i64 bpp : *snap) {
        const i64 b = bpp + fv(2 * k);
        visit({fv(2 * k), fv(2 * k + 2) - 1, b + 1, b + fv(2 * k + 1)});
      }
    }
    if (fv(2 * k + 1) <= n_hi && fv(2 * k + 2) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(
          family_kind::Eprime, k,
          checked_add(d_max, fv(2 * k), "verify_partition: T anchors"));
      for (i64 g : *snap)
        visit({fv(2 * k + 1), fv(2 * k + 2) - 1, g - fv(2 * k) + 1, g});
    }
  }

  for (i64 n = n_lo; n <= n_hi; ++n)
    for (i64 m = 0; m <= win.m_max; ++m) {
      const int c = count[static_cast<std::size_t>((n - n_lo) * cols + m)];
      if (c == 1)
        ++rep.covered_once;
      else
        rep.anomalies.push_back({m, n, c});
    }
  return rep;
}

std::vector<parallelogram> parallelograms_in_window(const window& win) {
  std::vector<parallelogram> out;
  if (win.empty()) return out;
  const i64 n_lo = std::max<i64>(win.n_min, 1);
  const i64 n_hi = win.n_max;
  const i64 d_max =
      checked_add(n_hi, win.m_max, "parallelograms_in_window: diagonal");

  auto meets = [&](const edges& e) {
    const i64 lo = std::max({e.row_lo, n_lo, e.diag_lo - win.m_max});
    const i64 hi = std::min({e.row_hi, n_hi, e.diag_hi});
    return lo <= hi;
  };

  if (n_lo <= 1) {
    out.push_back({region_kind::origin, 0, 0, 0});
    const i64 row1_bound =
        checked_add(win.m_max, 1, "parallelograms_in_window: row-1 bound");
    auto snap = family_snapshot_upto(family_kind::Eprime, 0, row1_bound);
    for (std::size_t t = 0; t < snap->size(); ++t) {
      if ((*snap)[t] > row1_bound) break;  // snapshot may extend past the bound
      out.push_back(
          {region_kind::U, -1, static_cast<i64>(t) + 1, (*snap)[t]});
    }
  }

  for (i64 k = 0;; ++k) {
    if (2 * k > seq::f_max_index() || fv(2 * k) > n_hi) break;
    if (fv(2 * k + 3) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(
          family_kind::Eprime, k + 1,
          checked_add(d_max, fv(2 * k + 2), "parallelograms_in_window: U"));
      for (std::size_t t = 0; t < snap->size(); ++t) {
        parallelogram p{region_kind::U, k, static_cast<i64>(t) + 1,
                        (*snap)[t]};
        if (meets(region_edges(p))) out.push_back(p);
      }
    }
    if (fv(2 * k + 2) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(family_kind::Fdoubleprime, k, d_max);
      for (std::size_t t = 0; t < snap->size(); ++t) {
        parallelogram p{region_kind::V, k, static_cast<i64>(t) + 1,
                        (*snap)[t] + fv(2 * k)};
        if (meets(region_edges(p))) out.push_back(p);
      }
    }
    if (fv(2 * k + 1) <= n_hi && fv(2 * k + 2) - 1 >= n_lo) {
      auto snap = family_snapshot_upto(
          family_kind::Eprime, k,
          checked_add(d_max, fv(2 * k), "parallelograms_in_window: T"));
      for (std::size_t t = 0; t < snap->size(); ++t) {
        parallelogram p{region_kind::T, k, static_cast<i64>(t) + 1, (*snap)[t]};
        if (meets(region_edges(p))) out.push_back(p);
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const parallelogram& a, const parallelogram& b) {
              return std::tuple(static_cast<int>(a.kind), a.k, a.index) <
                     std::tuple(static_cast<int>(b.kind), b.k, b.index);
            });
  return out;
}

}  // namespace hankel::lattice
