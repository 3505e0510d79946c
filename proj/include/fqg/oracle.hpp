#pragma once

// Independent check on the idempotent engine: split the center of F_q[G]
// with linear algebra and polynomial factorization only.

#include <cstdint>
#include <vector>

#include "fqg/group.hpp"
#include "fqg/group_algebra.hpp"

namespace fqg {

/// Number of orbits of conjugacy classes under g -> g^q.  Throws NotSemisimple.
std::uint64_t q_class_count(const FiniteGroup& G, std::uint64_t q);

/// Class sums in class order (classes sorted by least member).
std::vector<AlgebraElement> class_sums(const GroupAlgebra& FG);

/// Primitive idempotents of Z(F_q[G]), sorted by coefficient vector.
/// Throws NotSemisimple.
std::vector<AlgebraElement> center_split(const GroupAlgebra& FG);

}  // namespace fqg
