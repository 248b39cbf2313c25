#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/linalg.hpp"
#include "ppa/matrix.hpp"

namespace ppa {

struct Arrow {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string label;
};

// Simply-laced quiver: every vertex weight 1, every arrow weight 1; parallel
// arrows and loops allowed.
struct Quiver {
    std::size_t n = 0;
    std::vector<Arrow> arrows;

    std::size_t size() const { return n; }
};

Quiver make_quiver(std::size_t n, std::vector<Arrow> arrows);

ValuedQuiver to_valued(const Quiver& q);

// Reverse the listed arrows (by label); labels survive the flip.
Quiver reverse_arrows(const Quiver& q, const std::vector<std::string>& labels);
Quiver reverse_all_arrows(const Quiver& q);

// Arrows 0..m-1 are the originals, m..2m-1 the duals (label + "*", endpoints
// swapped).
struct DoubleQuiver {
    std::size_t n = 0;
    std::size_t original_count = 0;
    std::vector<Arrow> arrows;

    std::size_t dual(std::size_t a) const {
        return a < original_count ? a + original_count : a - original_count;
    }
    bool is_dual(std::size_t a) const { return a >= original_count; }
};

DoubleQuiver double_quiver(const Quiver& q);

// A signed length-2 path: traverse `first`, then `second`.
struct RelationTerm {
    std::size_t first = 0;
    std::size_t second = 0;
    int coeff = 0;
};

// at_vertex[v] holds e_v c e_v for c = sum_a (a a* - a* a):
//   sum_{source(a)=v} a a*  -  sum_{target(a)=v} a* a.
struct RelationSet {
    std::vector<std::vector<RelationTerm>> at_vertex;
};

RelationSet preprojective_relations(const DoubleQuiver& dq);

struct OracleOptions {
    std::size_t max_degree = 8;
    std::size_t degree_cap = 8;             // requests past this fail loudly
    std::size_t path_count_cap = 1000000;   // per (degree, i, j) block
    FieldMode field;                        // exact by default
    bool reverse_enumeration = false;       // alternate deterministic path order
};

// Length-graded path basis of the double quiver, built level by level in
// label-lexicographic order (or its reverse).
class PathEnumerator {
  public:
    PathEnumerator(const DoubleQuiver& dq, const OracleOptions& opt);

    struct Level {
        std::vector<std::vector<std::size_t>> paths;  // arrow index sequences
        std::vector<std::size_t> start, end;
        std::vector<std::vector<std::vector<std::size_t>>> block;  // [i][j] -> path ids
        std::map<std::vector<std::size_t>, std::size_t> pos_in_block;

        std::size_t block_size(std::size_t i, std::size_t j) const { return block[i][j].size(); }
    };

    const Level& level(std::size_t r);

  private:
    const DoubleQuiver& dq_;
    OracleOptions opt_;
    std::vector<std::size_t> extension_order_;  // arrow ids sorted by label
    std::vector<Level> levels_;
};

struct SocleInjectivityReport {
    bool pass = true;
    std::size_t degree = 0;
    std::size_t kernel_dim = 0;  // summed over blocks
    std::string witness;         // combination of paths, first failing block only
    std::string message;
};

struct OrientationInvarianceReport {
    bool pass = true;
    std::size_t degree = 0, i = 0, j = 0;  // first differing entry
    std::string message;
};

// Exact degree-truncated computation of the graded components of the double
// quiver modulo the span of p (e_v c e_v) q. Ranks are memoized per block.
class PathOracle {
  public:
    explicit PathOracle(Quiver q, OracleOptions opt = {});
    PathOracle(const PathOracle&) = delete;
    PathOracle& operator=(const PathOracle&) = delete;

    const Quiver& quiver() const { return q_; }
    const DoubleQuiver& doubled() const { return dq_; }
    const RelationSet& relations() const { return rels_; }
    const OracleOptions& options() const { return opt_; }

    // dim e_i Pi_r e_j = #paths(i,j,r) - rank of the relation span.
    IntMatrix dims(std::size_t r);
    GradedDimTable table(std::size_t max_degree);

    std::size_t path_count(std::size_t r, std::size_t i, std::size_t j);
    std::size_t relation_rank(std::size_t r, std::size_t i, std::size_t j);

    // Kernel of x -> (x gamma)_gamma on degree r, counted by exact ranks.
    SocleInjectivityReport socle_injectivity(std::size_t r);

  private:
    std::vector<IntVec> relation_rows(std::size_t r, std::size_t i, std::size_t j);

    Quiver q_;
    OracleOptions opt_;
    DoubleQuiver dq_;
    RelationSet rels_;
    PathEnumerator paths_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> rank_memo_;
};

IntMatrix graded_component_dims(const Quiver& q, std::size_t r, const OracleOptions& opt = {});

SocleInjectivityReport socle_injectivity_check(const Quiver& q, std::size_t r,
                                               const OracleOptions& opt = {});

OrientationInvarianceReport orientation_invariance_check(const Quiver& q,
                                                         const std::vector<std::string>& flips,
                                                         std::size_t max_degree,
                                                         const OracleOptions& opt = {});

}  // namespace ppa
