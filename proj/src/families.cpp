#include "hankel/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "hankel/frep.hpp"
#include "hankel/fseq.hpp"

namespace hankel::lattice {

namespace {

using seq::f;
using seq::phi;

// One generation of the E-chain or F-chain, with the derived sub-families
// materialized side by side. Snapshots are immutable vectors swapped out
// under the lock, so readers can hold them lock-free.
struct chain {
  std::mutex mu;
  bool is_e_chain;
  i64 k;
  i64 target_lo;   // E: f_{2k+3}/2,            F: f_{2k+1}/2
  i64 target_hi;   // E: f_{2k+3}/2 + f_{2k},   F: unused
  i64 last = 0;    // most recently emitted member (none yet)
  std::shared_ptr<const std::vector<i64>> all;
  std::shared_ptr<const std::vector<i64>> sub_prime;
  std::shared_ptr<const std::vector<i64>> sub_dprime;

  chain(bool e_chain, i64 gen) : is_e_chain(e_chain), k(gen) {
    if (k < 0) throw std::invalid_argument("family generation k must be >= 0");
    if (is_e_chain) {
      target_lo = f(static_cast<int>(2 * k + 3)) / 2;
      target_hi = checked_add(target_lo, f(static_cast<int>(2 * k)), "family E target");
    } else {
      target_lo = f(static_cast<int>(2 * k + 1)) / 2;
      target_hi = 0;
    }
    all = std::make_shared<const std::vector<i64>>();
    sub_prime = all;
    sub_dprime = all;
  }

  // Whether the digits a_{2k+3}, a_{2k+4} of x are both clear; these are
  // exactly the digits phi_{k+1} sees beyond phi_k.
  bool high_digits_clear(i64 x) const { return phi(k + 1, x) == phi(k, x); }

  void extend_locked(i64 value_goal, i64 all_count, i64 prime_count, i64 dprime_count) {
    if (!all->empty() && all->back() >= value_goal &&
        static_cast<i64>(all->size()) >= all_count &&
        static_cast<i64>(sub_prime->size()) >= prime_count &&
        static_cast<i64>(sub_dprime->size()) >= dprime_count)
      return;  // keep published snapshots; no copying on the hot path
    std::vector<i64> new_all(*all);
    std::vector<i64> new_prime(*sub_prime);
    std::vector<i64> new_dprime(*sub_dprime);
    while (new_all.empty() || new_all.back() < value_goal ||
           static_cast<i64>(new_all.size()) < all_count ||
           static_cast<i64>(new_prime.size()) < prime_count ||
           static_cast<i64>(new_dprime.size()) < dprime_count) {
      i64 next;
      if (new_all.empty()) {
        next = target_lo;
      } else if (is_e_chain) {
        // An E' member with clear high digits steps by f_{2k} into E'';
        // every other member steps by f_{2k+2} into E'.
        const bool in_prime = phi(k, last) == target_lo;
        const i64 step = (in_prime && high_digits_clear(last))
                             ? f(static_cast<int>(2 * k))
                             : f(static_cast<int>(2 * k + 2));
        next = checked_add(last, step, "E-chain successor");
      } else {
        // An F' member steps by f_{2k+3}; an F'' member steps by f_{2k+2}.
        const i64 step = high_digits_clear(last) ? f(static_cast<int>(2 * k + 3))
                                                 : f(static_cast<int>(2 * k + 2));
        next = checked_add(last, step, "F-chain successor");
      }
      // Cross-check each emitted member against the membership predicate.
      const i64 p = phi(k, next);
      if (is_e_chain) {
        if (p != target_lo && p != target_hi)
          throw std::logic_error("E-chain successor left the family at " + std::to_string(next));
        (p == target_lo ? new_prime : new_dprime).push_back(next);
      } else {
        if (p != target_lo)
          throw std::logic_error("F-chain successor left the family at " + std::to_string(next));
        (high_digits_clear(next) ? new_prime : new_dprime).push_back(next);
      }
      new_all.push_back(next);
      last = next;
    }
    all = std::make_shared<const std::vector<i64>>(std::move(new_all));
    sub_prime = std::make_shared<const std::vector<i64>>(std::move(new_prime));
    sub_dprime = std::make_shared<const std::vector<i64>>(std::move(new_dprime));
  }
};

struct chain_key {
  bool is_e_chain;
  i64 k;
  auto operator<=>(const chain_key&) const = default;
};

bool is_e_family(family_kind kind) {
  return kind == family_kind::E || kind == family_kind::Eprime ||
         kind == family_kind::Edoubleprime;
}

chain& chain_for(family_kind kind, i64 k) {
  static std::mutex registry_mu;
  static std::map<chain_key, std::unique_ptr<chain>> registry;
  const chain_key key{is_e_family(kind), k};
  std::lock_guard<std::mutex> lock(registry_mu);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_unique<chain>(key.is_e_chain, k)).first;
  return *it->second;
}

std::shared_ptr<const std::vector<i64>> snapshot(family_kind kind, i64 k, i64 value_goal,
                                                 i64 count_goal) {
  chain& c = chain_for(kind, k);
  std::lock_guard<std::mutex> lock(c.mu);
  i64 all_count = 0, prime_count = 0, dprime_count = 0;
  switch (kind) {
    case family_kind::E:
    case family_kind::F: all_count = count_goal; break;
    case family_kind::Eprime:
    case family_kind::Fprime: prime_count = count_goal; break;
    case family_kind::Edoubleprime:
    case family_kind::Fdoubleprime: dprime_count = count_goal; break;
  }
  c.extend_locked(value_goal, all_count, prime_count, dprime_count);
  switch (kind) {
    case family_kind::E:
    case family_kind::F: return c.all;
    case family_kind::Eprime:
    case family_kind::Fprime: return c.sub_prime;
    case family_kind::Edoubleprime:
    case family_kind::Fdoubleprime: return c.sub_dprime;
  }
  throw std::invalid_argument("unknown family kind");
}

}  // namespace

const char* to_string(family_kind kind) {
  switch (kind) {
    case family_kind::E: return "E";
    case family_kind::Eprime: return "Eprime";
    case family_kind::Edoubleprime: return "Edoubleprime";
    case family_kind::F: return "F";
    case family_kind::Fprime: return "Fprime";
    case family_kind::Fdoubleprime: return "Fdoubleprime";
  }
  return "?";
}

i64 family_member(family_kind kind, i64 k, i64 i) {
  if (i < 1) throw std::invalid_argument("family_member: index is 1-based");
  const auto snap = snapshot(kind, k, 0, i);
  return (*snap)[static_cast<std::size_t>(i - 1)];
}

std::vector<i64> family_upto(family_kind kind, i64 k, i64 bound) {
  const auto snap = family_snapshot_upto(kind, k, bound);
  const auto end = std::upper_bound(snap->begin(), snap->end(), bound);
  return {snap->begin(), end};
}

std::shared_ptr<const std::vector<i64>> family_snapshot_upto(family_kind kind, i64 k, i64 bound) {
  return snapshot(kind, k, bound, 0);
}

std::shared_ptr<const std::vector<i64>> family_snapshot_count(family_kind kind, i64 k, i64 count) {
  return snapshot(kind, k, 0, count);
}

}  // namespace hankel::lattice
