#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ppa::testsupport {

struct PropertyResult {
    bool pass = true;
    std::size_t cases_run = 0;
    std::string first_failure;
};

// Randomized structural checks over seeded connected loop-free valued
// quivers (n <= 5): Euler-matrix symmetrization, symmetry of the graded
// matrices, reflection involutivity, invariance of the bilinear form, and
// classification stability under orientation reversal.
PropertyResult run_property_suite(std::uint64_t seed, std::size_t cases);

}  // namespace ppa::testsupport
