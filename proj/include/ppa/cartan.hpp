#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppa/matrix.hpp"

namespace ppa {

// Arrow i -> j carrying a positive integer weight. Vertices are 0-based in the
// library; the CLI layer translates to and from 1-based labels.
struct ValuedArrow {
    int from = 0;
    int to = 0;
    Int weight = 1;
};

// Valued quiver: vertex weights d_i plus merged arrow weights r_ij. Parallel
// arrows are merged by summing weights at construction. Invariants enforced:
// d_i >= 1, weights >= 1, d_i | r_ij and d_j | r_ij, underlying graph connected.
// Loops (i == j) are allowed.
struct ValuedQuiver {
    std::vector<Int> d;
    IntMatrix R;

    std::size_t size() const { return d.size(); }
};

ValuedQuiver make_valued_quiver(std::vector<Int> d, const std::vector<ValuedArrow>& arrows);

// Reverse the arrows whose (from, to) pair index is listed; flip_all reverses
// every arrow. Weights travel with their arrows.
ValuedQuiver reverse_arrows(const ValuedQuiver& q, const std::vector<std::pair<int, int>>& pairs);
ValuedQuiver reverse_all_arrows(const ValuedQuiver& q);

enum class Classification { Dynkin, Affine, Indefinite, BorcherdsWithLoops };

const char* classification_name(Classification c);

struct DynkinName {
    char series = '?';  // A B C D E F G
    int rank = 0;
    std::string str() const { return std::string(1, series) + std::to_string(rank); }
    bool operator==(const DynkinName& o) const { return series == o.series && rank == o.rank; }
};

// Derived Cartan data of a valued quiver. All matrices are n-by-n integer:
//   D    = diag(d_i)
//   B    = R + R^T                (symmetric, loops contribute twice)
//   Bbar = D^{-1} B               (integral by the divisibility invariant)
//   C    = 2 I - Bbar             (symmetrizable: D C symmetric)
//   E    = D - R                  (Euler matrix; E + E^T = 2 D - B always)
struct CartanDatum {
    std::vector<Int> d;
    IntMatrix D, R, B, Bbar, C, E;
    Classification cls = Classification::Indefinite;
    std::optional<DynkinName> dynkin;

    std::size_t size() const { return d.size(); }
};

CartanDatum build_cartan(const ValuedQuiver& q);

// Rebuild a datum from a Cartan-like matrix: integer entries, even diagonal
// <= 2, off-diagonal <= 0, symmetrizable, connected. Without an explicit
// symmetrizer the minimal positive integer one is computed. The default
// orientation puts all weight above the diagonal (r_ij = b_ij for i < j) and
// splits loops evenly (r_ii = b_ii / 2).
CartanDatum from_cartan_matrix(const IntMatrix& c,
                               std::optional<std::vector<Int>> symmetrizer = std::nullopt);

// Classification by exact sign analysis of the leading principal minors of
// D*C (never eigenvalues): positive definite <=> Dynkin; positive semidefinite
// with a one-dimensional radical <=> Affine; loops force BorcherdsWithLoops.
Classification classify(const CartanDatum& cd);

// Named Dynkin type via shape analysis of the valued graph; only meaningful
// when classify(cd) == Dynkin.
DynkinName dynkin_type(const CartanDatum& cd);

// Standard Cartan matrix of a named finite type (Bourbaki vertex numbering;
// B_n carries the short valued leaf, C_n is its transpose).
IntMatrix standard_cartan(char series, int rank);

}  // namespace ppa
