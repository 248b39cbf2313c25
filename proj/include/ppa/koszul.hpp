#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppa/linalg.hpp"
#include "ppa/path_algebra.hpp"

namespace ppa {

// Basis of the dual algebra: e_1..e_n (degree 0), the arrows of the double
// quiver (degree 1), z_1..z_n (degree 2). Products of basis elements are 0 or
// a single signed basis element, so the whole multiplication is one table.
struct KoszulBasisElement {
    int degree = 0;
    std::string name;
    std::size_t start = 0, end = 0;  // e_i and z_i sit at (i, i)
};

struct KoszulProduct {
    int coeff = 0;          // 0 means the product vanishes
    std::size_t index = 0;  // meaningful only when coeff != 0
};

struct KoszulDualTable {
    std::size_t n = 0;
    std::size_t arrow_count = 0;  // arrows of the double quiver
    std::vector<KoszulBasisElement> basis;
    std::vector<std::vector<KoszulProduct>> table;

    std::size_t e_index(std::size_t i) const { return i; }
    std::size_t arrow_index(std::size_t k) const { return n + k; }
    std::size_t z_index(std::size_t i) const { return n + arrow_count + i; }
};

// Multiplication table on the finite basis: idempotent rules, a.a* = z at the
// source, a*.a = -z at the target, every other arrow product and every
// product of total degree > 2 is zero.
KoszulDualTable koszul_dual_table(const Quiver& q);

struct KoszulCheckReport {
    bool pass = true;
    std::string message;
};

// (xy)z = x(yz) over every basis triple.
KoszulCheckReport koszul_associativity_check(const KoszulDualTable& t);

// Pinned signs and vanishing pattern of the degree 1 x degree 1 block.
KoszulCheckReport koszul_sign_check(const KoszulDualTable& t, const DoubleQuiver& dq);

struct QuadraticDualReport {
    bool pass = true;
    std::size_t pair_count = 0;   // composable length-2 paths
    std::size_t kernel_dim = 0;   // pair_count - n when the pairing is surjective
    std::string message;
};

// Non-Dynkin only (Dynkin input is refused): the vertexwise pairing on
// composable pairs is surjective, and arrow x kernel + kernel x arrow spans
// every length-3 path component.
QuadraticDualReport quadratic_dual_degree3_check(const Quiver& q, const FieldMode& field = {});

}  // namespace ppa
