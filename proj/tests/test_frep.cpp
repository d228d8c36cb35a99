#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"

using hankel::i64;
namespace seq = hankel::seq;

namespace {

// Independent enumerator of every valid digit vector whose value stays below
// the cap: descending index DFS honoring both digit constraints. Used as the
// uniqueness oracle — it never calls encode.
void enumerate_valid(int idx, int prev_chosen, i64 value, i64 cap,
                     std::vector<std::uint8_t>& digits,
                     std::vector<std::pair<i64, std::vector<std::uint8_t>>>& out) {
  if (idx < 0) {
    out.emplace_back(value, digits);
    return;
  }
  enumerate_valid(idx - 1, prev_chosen, value, cap, digits, out);
  const bool adjacent = prev_chosen == idx + 1;
  const bool even_pair = prev_chosen == idx + 2 && idx % 2 == 0;
  const i64 next = value + seq::f(idx);
  if (!adjacent && !even_pair && next < cap) {
    digits[idx] = 1;
    enumerate_valid(idx - 1, idx, next, cap, digits, out);
    digits[idx] = 0;
  }
}

}  // namespace

TEST_SUITE("frep") {

TEST_CASE("frozen encodings") {
  CHECK(seq::f_rep::encode(0).digits().empty());
  CHECK(seq::f_rep::encode(0).decode() == 0);

  const auto r12 = seq::f_rep::encode(12);  // 12 = f_1 + f_5
  CHECK(r12.digit(1));
  CHECK(r12.digit(5));
  CHECK_FALSE(r12.digit(0));
  CHECK_FALSE(r12.digit(3));
  CHECK_FALSE(r12.digit(99));  // beyond the stored width

  const auto r13 = seq::f_rep::encode(13);  // 13 = f_2 + f_5
  CHECK(r13.digit(2));
  CHECK(r13.digit(5));
}

TEST_CASE("decode of hand-built digit vectors") {
  CHECK(seq::f_rep::from_digits({0, 1, 0, 0, 0, 1}).decode() == 12);
  CHECK(seq::f_rep::from_digits({1, 0, 0, 1}).decode() == 5);  // f_0 + f_3
  CHECK(seq::f_rep::from_digits({}).decode() == 0);
}

TEST_CASE("validate pinpoints the violated constraint") {
  using hankel::seq::validate;
  const std::uint8_t adjacent[] = {0, 1, 1};
  auto v = validate(adjacent);
  CHECK_FALSE(v.ok);

  const std::uint8_t even_pair[] = {1, 0, 1};
  auto w = validate(even_pair);
  CHECK_FALSE(w.ok);
  CHECK(std::string(v.rule) != std::string(w.rule));  // distinct diagnostics

  const std::uint8_t fine[] = {0, 1, 0, 1};
  CHECK(validate(fine).ok);
  CHECK(seq::f_rep::from_digits({0, 1, 0, 1}).decode() == 6);

  const std::uint8_t odd_pair[] = {0, 1, 0, 1, 0};  // a_1,a_3: allowed
  CHECK(validate(odd_pair).ok);

  CHECK_THROWS_AS(seq::f_rep::from_digits({1, 1}).decode(), std::domain_error);
  CHECK_THROWS_AS(seq::f_rep::from_digits({0, 0, 1, 0, 1}).decode(),
                  std::domain_error);  // a_2,a_4 even pair
}

TEST_CASE("round trip over a dense range") {
  for (i64 n = 0; n < 200000; ++n) {
    const auto rep = seq::f_rep::encode(n);
    CHECK(hankel::seq::validate(rep.digits()).ok);
    if (rep.decode() != n) {
      REQUIRE(rep.decode() == n);  // stop at the first failure with context
    }
  }
  CHECK_THROWS_AS(seq::f_rep::encode(-1), std::invalid_argument);
}

TEST_CASE("uniqueness: the constrained vectors biject onto [0, cap)") {
  const i64 cap = 20000;
  int top = 0;
  while (seq::f(top + 1) < cap) ++top;
  std::vector<std::uint8_t> digits(top + 1, 0);
  std::vector<std::pair<i64, std::vector<std::uint8_t>>> all;
  enumerate_valid(top, top + 10, 0, cap, digits, all);

  REQUIRE(static_cast<i64>(all.size()) == cap);  // one vector per value
  std::set<i64> seen;
  for (const auto& [value, vec] : all) {
    CHECK(seen.insert(value).second);
    const auto rep = seq::f_rep::encode(value);
    // encode agrees with the unique constrained vector
    for (int i = 0; i <= top; ++i) CHECK(rep.digit(i) == (vec[i] != 0));
  }
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == cap - 1);
}

TEST_CASE("phi truncates the expansion") {
  CHECK(seq::phi(0, 9) == 2);   // 9 = f_1 + f_4, keep i <= 2
  CHECK(seq::phi(1, 9) == 9);   // f_4 within i <= 4
  CHECK(seq::phi(3, 0) == 0);
  CHECK(seq::phi(0, 2) == 2);
  CHECK(seq::phi(1, 13) == 3);  // 13 = f_2 + f_5, keep i <= 4
  for (i64 n = 0; n < 3000; ++n) {
    i64 prev = 0;
    for (i64 k = 0; k <= 12; ++k) {
      const i64 cur = seq::phi(k, n);
      CHECK(cur >= prev);  // monotone in k
      CHECK(cur <= n);
      prev = cur;
    }
    CHECK(prev == n);  // wide enough truncation recovers n
  }
}

}  // TEST_SUITE
