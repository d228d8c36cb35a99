#include "hankel/oracle.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hankel/word.hpp"

namespace hankel::oracle {

namespace {

using boost::multiprecision::cpp_int;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t pool_size = 256;

bool is_prime(u32 x) {
  if (x % 2 == 0) return x == 2;
  for (u32 d = 3; static_cast<u64>(d) * d <= x; d += 2)
    if (x % d == 0) return false;
  return x > 1;
}

std::vector<u32> build_pool() {
  std::vector<u32> pool;
  pool.reserve(pool_size);
  for (u32 x = 2147483647u; pool.size() < pool_size; x -= 2)
    if (is_prime(x)) pool.push_back(x);
  return pool;
}

// Barrett reduction for a fixed 31-bit modulus: products of two reduced
// values fit in 62 bits, and floor(2^64/p) fits in a 64-bit magic constant.
struct barrett {
  u64 p;
  u64 magic;

  explicit barrett(u64 modulus)
      : p(modulus), magic(static_cast<u64>((u128{1} << 64) / modulus)) {}

  u64 reduce(u64 x) const {
    const u64 q = static_cast<u64>((u128{x} * magic) >> 64);
    u64 r = x - q * p;
    if (r >= p) r -= p;
    return r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(a * b); }
  u64 pow(u64 base, u64 e) const {
    u64 acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
};

// Determinant of the order-n Hankel matrix over GF(p) by elimination with
// explicit pivot inversion; returns the fully reduced value in [0, p).
u64 det_mod_p(std::span<const std::uint8_t> strip, i64 order, const barrett& br) {
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<u64> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = strip[i + j];

  u64 det = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(a[pivot * n + j], a[k * n + j]);
      negate = !negate;
    }
    const u64 pv = a[k * n + k];
    det = br.mul(det, pv);
    const u64 inv = br.pow(pv, br.p - 2);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 lead = a[i * n + k];
      if (lead == 0) continue;
      const u64 factor = br.mul(lead, inv);
      a[i * n + k] = 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        const u64 t = br.mul(factor, a[k * n + j]);
        u64 v = a[i * n + j] + br.p - t;
        if (v >= br.p) v -= br.p;
        a[i * n + j] = v;
      }
    }
  }
  if (negate && det != 0) det = br.p - det;
  return det;
}

i64 narrow_checked(const cpp_int& value, const char* what) {
  static const cpp_int lo = std::numeric_limits<i64>::min();
  static const cpp_int hi = std::numeric_limits<i64>::max();
  if (value < lo || value > hi)
    throw overflow_error(std::string(what) + ": determinant exceeds 64 bits");
  return value.convert_to<i64>();
}

}  // namespace

const char* to_string(method how) {
  return how == method::bareiss ? "bareiss" : "crt";
}

hankel_matrix::hankel_matrix(i64 m, i64 n) : m_(m), n_(n) {
  if (m < 0 || n < 1)
    throw std::domain_error("hankel_matrix: requires m >= 0 and n >= 1");
  const i64 len = checked_add(m, checked_mul(2, n, "hankel_matrix: strip"),
                              "hankel_matrix: strip") -
                  1;
  auto buf = seq::word().prefix(len);
  strip_.assign(buf->begin() + m, buf->begin() + len);
}

int hankel_matrix::entry(i64 i, i64 j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("hankel_matrix::entry: index outside the order");
  return strip_[static_cast<std::size_t>(i + j)];
}

i64 det_bareiss(const hankel_matrix& mat) {
  const std::size_t n = static_cast<std::size_t>(mat.order());
  const auto strip = mat.strip();
  std::vector<cpp_int> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = int(strip[i + j]);

  bool negate = false;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j)
        std::swap(a[pivot * n + j], a[k * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        // Fraction-free update: the division by the previous pivot is exact.
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  cpp_int det = a[n * n - 1];
  if (negate) det = -det;
  return narrow_checked(det, "det_bareiss");
}

std::span<const u32> prime_pool() {
  static const std::vector<u32> pool = build_pool();
  return pool;
}

std::size_t primes_needed(i64 n) {
  if (n < 1) throw std::domain_error("primes_needed: order must be positive");
  static std::mutex mu;
  static std::vector<std::size_t> cache;  // cache[n-1], 0 = unset
  std::scoped_lock lock(mu);
  if (static_cast<std::size_t>(n) <= cache.size() && cache[n - 1] != 0)
    return cache[n - 1];

  // Smallest t with (p_0 ... p_{t-1})^2 > 4 n^n, all in exact arithmetic.
  const cpp_int bound = 4 * boost::multiprecision::pow(cpp_int(n),
                                                       static_cast<unsigned>(n));
  cpp_int product = 1;
  const auto pool = prime_pool();
  for (std::size_t t = 0; t < pool.size(); ++t) {
    product *= pool[t];
    if (product * product > bound) {
      if (static_cast<std::size_t>(n) > cache.size()) cache.resize(n, 0);
      cache[n - 1] = t + 1;
      return t + 1;
    }
  }
  throw prime_pool_error("primes_needed: order " + std::to_string(n) +
                         " exceeds what the fixed prime pool certifies");
}

i64 det_crt(const hankel_matrix& mat) {
  const std::size_t t = primes_needed(mat.order());
  const auto pool = prime_pool();

  std::vector<u64> residues(t);
  for (std::size_t s = 0; s < t; ++s)
    residues[s] = det_mod_p(mat.strip(), mat.order(), barrett(pool[s]));

  // Incremental Garner recombination: x is the unique value mod p_0...p_s.
  cpp_int x = residues[0];
  cpp_int modulus = pool[0];
  for (std::size_t s = 1; s < t; ++s) {
    const barrett br(pool[s]);
    const u64 x_mod = (x % pool[s]).convert_to<u64>();
    const u64 m_mod = (modulus % pool[s]).convert_to<u64>();
    u64 delta = residues[s] + br.p - x_mod;
    if (delta >= br.p) delta -= br.p;
    const u64 step = br.mul(delta, br.pow(m_mod, br.p - 2));
    x += modulus * step;
    modulus *= pool[s];
  }
  if (x * 2 > modulus) x -= modulus;  // symmetric lift
  return narrow_checked(x, "det_crt");
}

i64 eval(i64 m, i64 n, method how) {
  const hankel_matrix mat(m, n);
  return how == method::bareiss ? det_bareiss(mat) : det_crt(mat);
}

}  // namespace hankel::oracle
