#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/matrix.hpp"

namespace ppa {

using Root = IntVec;

// s_i(x) = x - (C x)_i e_i; integral form of the reflection in the symmetric
// bilinear form represented by D*C.
Root simple_reflection(const CartanDatum& cd, std::size_t i, const Root& x);
IntMatrix reflection_matrix(const CartanDatum& cd, std::size_t i);

struct RootSystem {
    std::vector<Root> roots;  // lexicographically sorted
    bool complete = true;     // false when a depth limit truncated the closure
    std::size_t depth_used = 0;

    std::size_t size() const { return roots.size(); }
};

// Breadth-first closure of {±e_i} under all simple reflections. Finite types
// close; everything else must pass a depth limit (the truncation is reported
// through `complete`, never silently). Every enumerated vector is checked to
// be entrywise >= 0 or entrywise <= 0.
RootSystem enumerate_roots(const CartanDatum& cd,
                           std::optional<std::size_t> depth_limit = std::nullopt);

struct CoxeterData {
    std::vector<std::size_t> order;  // admissible vertex order, sources first
    IntMatrix cminus;                // reflection product s_{v_n} ... s_{v_1}
    IntMatrix cox;                   // its inverse; satisfies E * cox = -E^T
    std::size_t h = 0;               // multiplicative order of cox
};

// Coxeter element of the orientation stored in cd.R (must be acyclic, no
// loops). The vertex order is the deterministic Kahn topological order, and
// the identity E * cox = -E^T is asserted on construction. The order search
// stops at order_cap (finite only for Dynkin data).
CoxeterData coxeter_element(const CartanDatum& cd, std::size_t order_cap = 10000);

// Orbit partition of the root system under cox; each orbit starts at its
// lexicographically smallest unvisited root.
std::vector<std::vector<Root>> coxeter_orbits(const RootSystem& rs, const CoxeterData& cox);

// Dimension vectors [P_i] = i-th row of (I - N)^{-1}, N = R D^{-1} (nilpotent
// for acyclic orientations; entries r_ij / d_j are integral).
std::vector<Root> projective_classes(const CartanDatum& cd);

struct TauOrbits {
    std::vector<std::size_t> m;        // least t >= 1 with cminus^t [P_i] <= 0
    std::vector<std::size_t> rho;      // cminus^{m_i} [P_i] = -[P_rho(i)]
    std::vector<std::vector<Root>> walks;  // walks[i] = { cminus^t [P_i] : 0 <= t < m_i }
};

// Walks the projective classes under cminus. Asserts rho is an involution,
// sum m_i = |Phi| / 2, and that the walks enumerate the positive roots exactly
// once (the bijection between tau-orbit slots and positive roots).
TauOrbits nakayama_permutation(const CartanDatum& cd, const CoxeterData& cox,
                               const RootSystem& rs);

}  // namespace ppa
