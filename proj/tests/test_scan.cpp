#include <doctest.h>

#include <stdexcept>

#include "hankel/closed_form.hpp"
#include "hankel/oracle.hpp"
#include "hankel/scan.hpp"

using hankel::i64;
namespace scan = hankel::scan;
using hankel::lattice::window;

TEST_SUITE("scan") {

TEST_CASE("closed grid values and bounds checking") {
  const window win{10, 1, 6};
  const scan::grid g = scan::closed_grid(win, false);
  REQUIRE(g.values.size() == 11 * 6);
  for (i64 n = 1; n <= 6; ++n)
    for (i64 m = 0; m <= 10; ++m)
      CHECK(g.at(m, n) == hankel::closed::eval(m, n));
  CHECK_THROWS_AS(g.at(11, 1), std::out_of_range);
  CHECK_THROWS_AS(g.at(0, 0), std::out_of_range);
  CHECK_THROWS_AS(g.at(0, 7), std::out_of_range);
}

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
  const window win{80, 1, 25};
  const scan::grid serial = scan::closed_grid(win, false);
  const scan::grid parallel = scan::closed_grid(win, true);
  CHECK(serial.values == parallel.values);

  const window small{25, 1, 12};
  const scan::grid o_serial =
      scan::oracle_grid(small, hankel::oracle::method::crt, false);
  const scan::grid o_parallel =
      scan::oracle_grid(small, hankel::oracle::method::crt, true);
  CHECK(o_serial.values == o_parallel.values);
}

TEST_CASE("closed form matches both oracle methods over a window") {
  const window win{30, 1, 10};
  const scan::grid closed = scan::closed_grid(win, true);
  const scan::grid bareiss =
      scan::oracle_grid(win, hankel::oracle::method::bareiss, false);
  const scan::grid crt =
      scan::oracle_grid(win, hankel::oracle::method::crt, true);

  const scan::compare_report against_bareiss = scan::compare(closed, bareiss);
  CHECK(against_bareiss.cells == 31 * 10);
  CHECK(against_bareiss.equal == against_bareiss.cells);
  CHECK(against_bareiss.mismatches.empty());

  const scan::compare_report against_crt = scan::compare(closed, crt);
  CHECK(against_crt.equal == against_crt.cells);
}

TEST_CASE("compare reports mismatches sorted by (n, m)") {
  const window win{2, 1, 2};
  scan::grid a = scan::closed_grid(win, false);
  scan::grid b = a;
  b.values[0] += 1;               // (m=0, n=1)
  b.values[3 + 2] += 5;           // (m=2, n=2)
  const scan::compare_report rep = scan::compare(a, b);
  CHECK(rep.cells == 6);
  CHECK(rep.equal == 4);
  REQUIRE(rep.mismatches.size() == 2);
  CHECK(rep.mismatches[0] == scan::mismatch{0, 1, a.values[0], b.values[0]});
  CHECK(rep.mismatches[1] == scan::mismatch{2, 2, a.values[5], b.values[5]});

  scan::grid other = scan::closed_grid(window{3, 1, 2}, false);
  CHECK_THROWS_AS(scan::compare(a, other), std::invalid_argument);
}

TEST_CASE("census tallies regions over a window") {
  const scan::census c = scan::census_of(window{10, 1, 5});
  CHECK(c.total() == 11 * 5);
  CHECK(c.origin == 1);
  // Degenerate row-1 cells in 0 <= m <= 10: m + 1 in {2, 6, 9}.
  CHECK(c.degenerate == 3);
  CHECK(c.u > 0);
  CHECK(c.v > 0);
  CHECK(c.t > 0);

  // A window that misses row 1 has no origin or degenerate cells.
  const scan::census high = scan::census_of(window{10, 2, 5});
  CHECK(high.origin == 0);
  CHECK(high.degenerate == 0);
  CHECK(high.total() == 11 * 4);
}

TEST_CASE("empty windows produce empty grids") {
  const scan::grid g = scan::closed_grid(window{5, 3, 2}, false);
  CHECK(g.values.empty());
  CHECK(scan::census_of(window{-1, 1, 4}).total() == 0);
}

}  // TEST_SUITE
