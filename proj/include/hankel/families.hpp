#pragma once

// Anchor families: the six index sets, parameterized by a generation k >= 0,
// whose members anchor the zero-parallelograms of the Hankel array.
//
//   E'_k  = { x : phi_k(x) = f_{2k+3}/2 }
//   E''_k = { x : phi_k(x) = f_{2k+3}/2 + f_{2k} }
//   E_k   = E'_k  union  E''_k
//   F_k   = { y : phi_k(y) = f_{2k+1}/2 }
//   F'_k  = { y in F_k : phi_{k+1}(y) = f_{2k+1}/2 }
//   F''_k = F_k minus F'_k
//
// Members are produced in increasing order by successor stepping (consecutive
// E_k members differ by f_{2k} or f_{2k+2}; an F_k member's successor is
// y + f_{2k+3} when y is in F'_k and y + f_{2k+2} otherwise), and every
// emitted member is cross-checked against the phi membership predicate.
// Families are memoized process-wide; snapshots are immutable and safe for
// concurrent readers while other threads extend the family.

#include <memory>
#include <vector>

#include "hankel/checked.hpp"

namespace hankel::lattice {

enum class family_kind { E, Eprime, Edoubleprime, F, Fprime, Fdoubleprime };

const char* to_string(family_kind kind);

// 1-based i-th smallest member.
i64 family_member(family_kind kind, i64 k, i64 i);

// All members <= bound, in increasing order.
std::vector<i64> family_upto(family_kind kind, i64 k, i64 bound);

// Immutable snapshot of the family's materialized prefix, guaranteed to
// contain every member <= bound (it may extend further).
std::shared_ptr<const std::vector<i64>> family_snapshot_upto(family_kind kind, i64 k, i64 bound);

// Snapshot guaranteed to contain at least `count` members.
std::shared_ptr<const std::vector<i64>> family_snapshot_count(family_kind kind, i64 k, i64 count);

}  // namespace hankel::lattice
