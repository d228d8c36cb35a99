// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact (zero tolerance); the only ratio test is the
// closed-vs-oracle performance criterion, thresholded at 1000x.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hankel/closed_form.hpp"
#include "hankel/criteria.hpp"
#include "hankel/families.hpp"
#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"
#include "hankel/oracle.hpp"
#include "hankel/partition.hpp"
#include "hankel/render.hpp"
#include "hankel/scan.hpp"
#include "hankel/word.hpp"

namespace {

using hankel::i64;
namespace closed = hankel::closed;
namespace lat = hankel::lattice;
namespace oracle = hankel::oracle;
namespace scan = hankel::scan;
namespace seq = hankel::seq;

int failures = 0;

void report(int index, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": "
            << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

i64 fv(i64 j) { return seq::f(static_cast<int>(j)); }

i64 sign_pow(i64 e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

i64 tri_lo(i64 r) { return (r % 4 == 2 || r % 4 == 3) ? 1 : 0; }
i64 tri_hi(i64 r) { return (r % 4 == 1 || r % 4 == 2) ? 1 : 0; }

// 1. Closed form equals the oracle on every cell of 0<=m<=150, 1<=n<=60.
void criterion_window_equivalence() {
  const lat::window win{150, 1, 60};
  const scan::grid lhs = scan::closed_grid(win, true);
  const scan::grid rhs = scan::oracle_grid(win, oracle::method::crt, true);
  const scan::compare_report rep = scan::compare(lhs, rhs);
  std::string detail = std::to_string(rep.equal) + "/" +
                       std::to_string(rep.cells) + " cells equal";
  if (!rep.mismatches.empty()) {
    const auto& mm = rep.mismatches.front();
    detail += "; first mismatch at m=" + std::to_string(mm.m) +
              " n=" + std::to_string(mm.n) + " closed=" +
              std::to_string(mm.lhs) + " oracle=" + std::to_string(mm.rhs);
  }
  report(1, "closed form == CRT oracle on 0<=m<=150, 1<=n<=60",
         rep.cells == 151 * 60 && rep.mismatches.empty(), detail);
}

// 2. Partition coverage: exactly-once on 0<=m<=500, 2<=n<=200, and the n=1
//    gaps are exactly the documented k=-1 cells.
void criterion_partition_exactness() {
  const auto inner = lat::verify_partition(lat::window{500, 2, 200});
  const bool inner_ok =
      inner.anomalies.empty() && inner.covered_once == inner.cells;

  const auto full = lat::verify_partition(lat::window{500, 1, 200});
  std::vector<lat::coverage_anomaly> expected;
  expected.push_back({0, 1, 0});
  const auto eprime0 = lat::family_upto(lat::family_kind::Eprime, 0, 501);
  for (i64 x : eprime0) expected.push_back({x - 1, 1, 0});
  std::sort(expected.begin(), expected.end(),
            [](const lat::coverage_anomaly& a, const lat::coverage_anomaly& b) {
              return std::pair(a.n, a.m) < std::pair(b.n, b.m);
            });
  const bool row1_ok =
      full.anomalies == expected && full.anomalies_allowlisted() &&
      full.covered_once == full.cells - static_cast<i64>(expected.size());

  report(2, "partition covers 0<=m<=500, 2<=n<=200 exactly once; row n=1 gaps"
            " are exactly {(0,1)} + {m+1 in E'_0}",
         inner_ok && row1_ok,
         "anomalies row1=" + std::to_string(full.anomalies.size()) +
             " expected=" + std::to_string(expected.size()));
}

// 3. Frozen corner values, each matched by the Bareiss oracle.
void criterion_corner_values() {
  struct sample {
    i64 m, n, value;
  };
  const sample samples[] = {{3, 9, 2}, {6, 23, -5}, {9, 4, 3}, {13, 3, -2}};
  bool ok = true;
  std::string detail;
  for (const sample& s : samples) {
    const i64 c = closed::eval(s.m, s.n);
    const i64 b = oracle::eval(s.m, s.n, oracle::method::bareiss);
    if (c != s.value || b != s.value) {
      ok = false;
      detail += "H(" + std::to_string(s.m) + "," + std::to_string(s.n) +
                ")=" + std::to_string(c) + "/" + std::to_string(b) +
                " want " + std::to_string(s.value) + "; ";
    }
  }
  report(3, "H(3,9)=2, H(6,23)=-5, H(9,4)=3, H(13,3)=-2, Bareiss-matched", ok,
         detail);
}

// 4. h-sequence: value law for 1<=k<=8, recurrence h_k = h_{k-2} - 2 h_{k-1},
//    oracle-checked through k=3.
void criterion_h_sequence() {
  bool ok = true;
  std::string detail;
  std::vector<i64> h(9, 0);
  for (i64 k = 0; k <= 8; ++k) {
    const i64 m = seq::half_f(2 * k + 1) + 1;
    const i64 n = fv(2 * k + 3) - 1;
    h[static_cast<std::size_t>(k)] = closed::eval(m, n);
    if (k >= 1 && h[static_cast<std::size_t>(k)] !=
                      sign_pow(k + 1) * seq::half_f(2 * k + 1)) {
      ok = false;
      detail += "value law fails at k=" + std::to_string(k) + "; ";
    }
    if (k >= 2 && h[static_cast<std::size_t>(k)] !=
                      h[static_cast<std::size_t>(k - 2)] -
                          2 * h[static_cast<std::size_t>(k - 1)]) {
      ok = false;
      detail += "recurrence fails at k=" + std::to_string(k) + "; ";
    }
    if (k <= 3) {
      const i64 b = oracle::eval(m, n, oracle::method::bareiss);
      const i64 c = oracle::eval(m, n, oracle::method::crt);
      if (b != h[static_cast<std::size_t>(k)] ||
          c != h[static_cast<std::size_t>(k)]) {
        ok = false;
        detail += "oracle disagrees at k=" + std::to_string(k) + "; ";
      }
    }
  }
  report(4, "h_k = (-1)^{k+1} f_{2k+1}/2 for k<=8 with h_k = h_{k-2} - 2h_{k-1},"
            " oracle-checked for k<=3",
         ok, detail);
}

// 5. Sequence/codec suite at the specified bounds.
void criterion_sequence_codec() {
  bool ok = true;
  std::string detail;

  for (i64 n = 0; n < 1000000; ++n) {
    const auto rep = seq::f_rep::encode(n);
    if (!seq::validate(rep.digits()).ok || rep.decode() != n) {
      ok = false;
      detail += "codec fails at n=" + std::to_string(n) + "; ";
      break;
    }
  }

  const auto prefix = seq::s_prefix(100000);
  for (i64 n = 0; n < 100000; ++n) {
    if (seq::s_at(n) != prefix[static_cast<std::size_t>(n)]) {
      ok = false;
      detail += "s_at diverges from the word at n=" + std::to_string(n) + "; ";
      break;
    }
  }

  for (i64 k = 0; k <= 5 && ok; ++k) {
    const i64 even_step = fv(2 * k);
    const i64 odd_step = fv(2 * k + 1);
    for (i64 n = 0; n < 10000; ++n) {
      if (seq::shift_even_differs(n, k) !=
          (seq::s_at(n + even_step) != seq::s_at(n))) {
        ok = false;
        detail += "even-shift criterion fails at n=" + std::to_string(n) +
                  " k=" + std::to_string(k) + "; ";
        break;
      }
      if (k >= 1 && seq::shift_odd_differs(n, k) !=
                        (seq::s_at(n + odd_step) != seq::s_at(n))) {
        ok = false;
        detail += "odd-shift criterion fails at n=" + std::to_string(n) +
                  " k=" + std::to_string(k) + "; ";
        break;
      }
    }
  }

  for (i64 j = 0; j <= 60 && ok; ++j) {
    const int expected = static_cast<int>(fv(j) % 4);
    if (seq::f_mod4(j) != expected) {
      ok = false;
      detail += "f mod 4 law fails at j=" + std::to_string(j) + "; ";
    }
  }

  report(5, "codec identity (n<10^6), s_at vs word (n<10^5), shift criteria"
            " (n<10^4, k<=5), f mod 4 law (j<=60)",
         ok, detail);
}

// 6. Edge and corner laws between closed-form values, k<=3, i<=10, all r.
void criterion_edge_corner_laws() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  for (i64 k = 0; k <= 3; ++k) {
    for (i64 i = 1; i <= 10; ++i) {
      // U edges, relative to the upper-right corner.
      const i64 alpha = lat::family_member(lat::family_kind::Eprime, k + 1, i);
      const i64 y = alpha - fv(2 * k + 3);
      const i64 un = fv(2 * k + 3) - 1;
      const i64 ubase = closed::eval(y + 1, un);
      for (i64 r = 0; r <= fv(2 * k + 2) - 1; ++r) {
        const i64 s = sign_pow(r * (k % 2) + tri_lo(r));
        if (closed::eval(y + 1 + r, un - r) != s * ubase)
          fail("U right edge k=" + std::to_string(k) + " i=" +
               std::to_string(i) + " r=" + std::to_string(r));
        const i64 m_left = alpha - fv(2 * k + 4) + 2 + r;
        if (m_left >= 0) {
          if (closed::eval(m_left, un - r) != s * ubase)
            fail("U left edge k=" + std::to_string(k) + " i=" +
                 std::to_string(i) + " r=" + std::to_string(r));
          if (closed::eval(m_left, un) != sign_pow(r) * ubase)
            fail("U top edge k=" + std::to_string(k) + " i=" +
                 std::to_string(i) + " r=" + std::to_string(r));
        }
      }

      // V edges, relative to the upper-right corner.
      const i64 bp = lat::family_member(lat::family_kind::Fdoubleprime, k, i);
      const i64 vn = fv(2 * k + 2) - 1;
      const i64 vbase = closed::eval(bp + 1, vn);
      for (i64 r = 0; r <= fv(2 * k + 1) - 1; ++r) {
        const i64 s = sign_pow(r * (k % 2) + tri_hi(r));
        if (closed::eval(bp + 1 + r, vn - r) != s * vbase)
          fail("V right edge k=" + std::to_string(k) + " i=" +
               std::to_string(i) + " r=" + std::to_string(r));
        const i64 m_left = bp - fv(2 * k + 1) + 2 + r;
        if (m_left >= 0) {
          if (closed::eval(m_left, vn - r) != s * vbase)
            fail("V left edge k=" + std::to_string(k) + " i=" +
                 std::to_string(i) + " r=" + std::to_string(r));
          if (closed::eval(m_left, vn) != vbase)
            fail("V top edge k=" + std::to_string(k) + " i=" +
                 std::to_string(i) + " r=" + std::to_string(r));
        }
      }

      // T edges, relative to the upper-right corner.
      const i64 gamma = lat::family_member(lat::family_kind::Eprime, k, i);
      const i64 tn = fv(2 * k + 2) - 1;
      const i64 tm = gamma - fv(2 * k + 2) + 1;
      if (tm >= 0) {
        const i64 tbase = closed::eval(tm, tn);
        for (i64 r = 0; r <= fv(2 * k) - 1; ++r) {
          const i64 s = sign_pow(r * (k % 2) + tri_lo(r));
          if (closed::eval(tm + r, tn - r) != s * tbase)
            fail("T right edge k=" + std::to_string(k) + " i=" +
                 std::to_string(i) + " r=" + std::to_string(r));
          const i64 m_left = gamma - fv(2 * k + 3) + 2 + r;
          if (m_left >= 0) {
            if (closed::eval(m_left, tn - r) != s * tbase)
              fail("T left edge k=" + std::to_string(k) + " i=" +
                   std::to_string(i) + " r=" + std::to_string(r));
            if (closed::eval(m_left, tn) != tbase)
              fail("T top edge k=" + std::to_string(k) + " i=" +
                   std::to_string(i) + " r=" + std::to_string(r));
          }
        }
      }

      // Corner recursions between generations (defined for k >= 1).
      if (k >= 1) {
        const i64 mu = alpha - fv(2 * k + 3) + 1;  // lower-left corner of U
        if (mu >= 0 &&
            closed::eval(mu, fv(2 * k)) !=
                sign_pow(k) * (closed::eval(mu + 1, fv(2 * k) - 1) -
                               closed::eval(mu, fv(2 * k) - 1)))
          fail("U lower-left corner law k=" + std::to_string(k) +
               " i=" + std::to_string(i));
        if (i >= 2) {
          const i64 mt = gamma - fv(2 * k + 2) + 1;  // lower-left corner of T
          if (mt >= 0 &&
              closed::eval(mt, fv(2 * k + 1)) !=
                  sign_pow(k) * (closed::eval(mt + 1, fv(2 * k + 1) - 1) +
                                 closed::eval(mt, fv(2 * k + 1) - 1)))
            fail("T lower-left corner law k=" + std::to_string(k) +
                 " i=" + std::to_string(i));
        }
      }
    }
  }

  report(6, "edge sign laws (all three edges of U, V, T) and lower-left corner"
            " recursions, k<=3, i<=10",
         ok, detail);
}

// 7. The 151x150 closed-form image is pixel-identical to the oracle image.
void criterion_figure_reproduction() {
  const lat::window win{150, 1, 150};
  const scan::grid lhs = scan::closed_grid(win, true);
  const scan::grid rhs = scan::oracle_grid(win, oracle::method::crt, true);
  const hankel::render::image a = hankel::render::assemble(lhs, false);
  const hankel::render::image b = hankel::render::assemble(rhs, false);
  const bool ok = a.width == b.width && a.height == b.height &&
                  a.bytes == b.bytes &&
                  hankel::render::ppm_string(a) == hankel::render::ppm_string(b);
  report(7, "closed-form and oracle renders of 0<=m<=150, 1<=n<=150 are"
            " pixel-identical",
         ok,
         std::to_string(a.width) + "x" + std::to_string(a.height) + " pixels");
}

// 8. Median closed-form latency at n=100 beats the CRT oracle by >= 1000x.
void criterion_performance() {
  using clock = std::chrono::steady_clock;
  constexpr i64 m = 0, n = 100;
  constexpr int reps = 5;

  volatile i64 sink = closed::eval(m, n) + oracle::eval(m, n, oracle::method::crt);

  std::vector<double> closed_ns(reps), oracle_ns(reps);
  for (int rep = 0; rep < reps; ++rep) {
    int iters = 1;
    for (;;) {
      const auto start = clock::now();
      i64 acc = 0;
      for (int it = 0; it < iters; ++it) acc += closed::eval(m, n);
      const auto stop = clock::now();
      sink = acc;
      const double elapsed =
          std::chrono::duration<double, std::nano>(stop - start).count();
      if (elapsed >= 2e6 || iters >= (1 << 22)) {
        closed_ns[static_cast<std::size_t>(rep)] = elapsed / iters;
        break;
      }
      iters *= 4;
    }
  }
  for (int rep = 0; rep < reps; ++rep) {
    const auto start = clock::now();
    sink = oracle::eval(m, n, oracle::method::crt);
    const auto stop = clock::now();
    oracle_ns[static_cast<std::size_t>(rep)] =
        std::chrono::duration<double, std::nano>(stop - start).count();
  }
  (void)sink;

  auto median = [](std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
  };
  const double c = median(closed_ns);
  const double o = median(oracle_ns);
  const double ratio = o / c;
  report(8, "closed form at n=100 is >= 1000x faster than the CRT oracle",
         ratio >= 1000.0,
         "closed=" + std::to_string(static_cast<i64>(c)) + "ns oracle=" +
             std::to_string(static_cast<i64>(o)) + "ns ratio=" +
             std::to_string(static_cast<i64>(ratio)) + "x");
}

}  // namespace

int main() {
  criterion_window_equivalence();
  criterion_partition_exactness();
  criterion_corner_values();
  criterion_h_sequence();
  criterion_sequence_codec();
  criterion_edge_corner_laws();
  criterion_figure_reproduction();
  criterion_performance();
  if (failures != 0)
    std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
