#include "doctest.h"

#include <cstddef>
#include <vector>

#include "ppa/error.hpp"
#include "ppa/koszul.hpp"
#include "ppa/path_algebra.hpp"

using namespace ppa;

namespace {

Quiver a2q() { return make_quiver(2, {{0, 1, "a"}}); }
Quiver a3q() { return make_quiver(3, {{0, 1, "a"}, {1, 2, "b"}}); }
Quiver d4q() { return make_quiver(4, {{0, 1, "a"}, {1, 2, "b"}, {1, 3, "c"}}); }
Quiver kronecker() { return make_quiver(2, {{0, 1, "a"}, {0, 1, "b"}}); }
Quiver kronecker3() { return make_quiver(2, {{0, 1, "a"}, {0, 1, "b"}, {0, 1, "c"}}); }
Quiver jordan() { return make_quiver(1, {{0, 0, "x"}}); }
Quiver a2tilde() { return make_quiver(3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}}); }
Quiver d4tilde() {
    return make_quiver(5, {{0, 4, "a"}, {1, 4, "b"}, {2, 4, "c"}, {3, 4, "d"}});
}

std::vector<Quiver> all_quivers() {
    return {a2q(), a3q(), d4q(), kronecker(), kronecker3(), jordan(), a2tilde(), d4tilde()};
}

}  // namespace

TEST_CASE("dual basis has idempotents, doubled arrows, and sockets") {
    const KoszulDualTable t = koszul_dual_table(a2q());
    CHECK(t.n == 2);
    CHECK(t.arrow_count == 2);
    REQUIRE(t.basis.size() == 6);  // 2n + 2m
    CHECK(t.basis[t.e_index(0)].degree == 0);
    CHECK(t.basis[t.arrow_index(0)].degree == 1);
    CHECK(t.basis[t.z_index(1)].degree == 2);
    CHECK(t.basis[t.z_index(0)].start == 0);
    CHECK(t.basis[t.z_index(0)].end == 0);
}

TEST_CASE("A2 dual products are pinned") {
    const KoszulDualTable t = koszul_dual_table(a2q());
    // arrow 0 is a (0 -> 1), arrow 1 is a* (1 -> 0)
    const KoszulProduct aa_star = t.table[t.arrow_index(0)][t.arrow_index(1)];
    CHECK(aa_star.coeff == 1);
    CHECK(aa_star.index == t.z_index(0));
    const KoszulProduct a_star_a = t.table[t.arrow_index(1)][t.arrow_index(0)];
    CHECK(a_star_a.coeff == -1);
    CHECK(a_star_a.index == t.z_index(1));
    // non-composable and degree > 2 products vanish
    CHECK(t.table[t.arrow_index(0)][t.arrow_index(0)].coeff == 0);
    CHECK(t.table[t.arrow_index(0)][t.z_index(1)].coeff == 0);
    CHECK(t.table[t.z_index(0)][t.z_index(0)].coeff == 0);
    // idempotent rules
    CHECK(t.table[t.e_index(0)][t.e_index(0)].coeff == 1);
    CHECK(t.table[t.e_index(0)][t.e_index(0)].index == t.e_index(0));
    CHECK(t.table[t.e_index(0)][t.e_index(1)].coeff == 0);
    CHECK(t.table[t.e_index(0)][t.arrow_index(0)].coeff == 1);
    CHECK(t.table[t.arrow_index(0)][t.e_index(1)].coeff == 1);
    CHECK(t.table[t.arrow_index(0)][t.e_index(0)].coeff == 0);
    CHECK(t.table[t.e_index(0)][t.z_index(0)].index == t.z_index(0));
}

TEST_CASE("the loop dual multiplies into a single socket") {
    const KoszulDualTable t = koszul_dual_table(jordan());
    const KoszulProduct xx_star = t.table[t.arrow_index(0)][t.arrow_index(1)];
    CHECK(xx_star.coeff == 1);
    CHECK(xx_star.index == t.z_index(0));
    const KoszulProduct x_star_x = t.table[t.arrow_index(1)][t.arrow_index(0)];
    CHECK(x_star_x.coeff == -1);
    CHECK(x_star_x.index == t.z_index(0));
    CHECK(t.table[t.arrow_index(0)][t.arrow_index(0)].coeff == 0);  // x.x
}

TEST_CASE("dual multiplication is associative with the pinned signs") {
    for (const Quiver& q : all_quivers()) {
        const KoszulDualTable t = koszul_dual_table(q);
        const DoubleQuiver dq = double_quiver(q);
        CAPTURE(q.n);
        CAPTURE(q.arrows.size());
        const KoszulCheckReport assoc = koszul_associativity_check(t);
        CAPTURE(assoc.message);
        CHECK(assoc.pass);
        const KoszulCheckReport signs = koszul_sign_check(t, dq);
        CAPTURE(signs.message);
        CHECK(signs.pass);
    }
}

TEST_CASE("degree three spanning is refused on finite types") {
    for (const Quiver& q : {a2q(), a3q(), d4q()}) {
        try {
            quadratic_dual_degree3_check(q);
            FAIL("expected a refusal");
        } catch (const Error& e) {
            CHECK(e.code() == Err::DynkinNotSupported);
        }
    }
}

TEST_CASE("degree three spanning holds beyond finite type") {
    struct Expect {
        Quiver q;
        std::size_t pairs;
    };
    for (const Expect& ex : std::vector<Expect>{{kronecker(), 8},
                                                {kronecker3(), 18},
                                                {jordan(), 4},
                                                {a2tilde(), 12},
                                                {d4tilde(), 20}}) {
        const QuadraticDualReport rep = quadratic_dual_degree3_check(ex.q);
        CAPTURE(ex.q.n);
        CAPTURE(rep.message);
        CHECK(rep.pass);
        CHECK(rep.pair_count == ex.pairs);
        CHECK(rep.kernel_dim == ex.pairs - ex.q.n);
    }
}
