#pragma once

#include <cstdint>
#include <vector>

#include "ppa/matrix.hpp"

namespace ppa {

// Field over which rank computations run. prime == 0 means exact integers.
// Prime mode is a speed escape hatch: ranks mod p can only undershoot the
// rational rank, so it is refused wherever a verification verdict depends on it.
struct FieldMode {
    std::uint64_t prime = 0;
    bool exact() const { return prime == 0; }
};

// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_det(IntMatrix a);

// Determinants of the leading principal k-by-k blocks, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& a);

// Exact rank of the span of integer row vectors. Fraction-free elimination
// with per-row gcd normalization; rank is invariant under row scaling, which
// lets untouched rows stay untouched (fast on the sparse relation matrices).
std::size_t exact_rank(std::vector<IntVec> rows);

// Rank of the row span over F_p.
std::size_t rank_mod_p(const std::vector<IntVec>& rows, std::uint64_t p);

// Dispatch on field mode; in prime mode requires p > width (the block path
// count guard) so that dimension counts cannot be confused by reduction.
std::size_t span_rank(const std::vector<IntVec>& rows, std::size_t width, const FieldMode& field);

// Basis of left dependencies: all rational vectors c with sum_k c_k rows[k] = 0.
std::vector<std::vector<Rat>> row_dependencies(const std::vector<IntVec>& rows);

bool is_probable_prime(std::uint64_t p);

}  // namespace ppa
