#include "doctest.h"

#include <utility>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/error.hpp"

using namespace ppa;

namespace {

CartanDatum standard(char series, int rank) {
    return from_cartan_matrix(standard_cartan(series, rank));
}

}  // namespace

TEST_CASE("valued quiver construction validates its invariants") {
    CHECK_THROWS_AS(make_valued_quiver({}, {}), Error);
    CHECK_THROWS_AS(make_valued_quiver({Int(0)}, {}), Error);                      // d >= 1
    CHECK_THROWS_AS(make_valued_quiver({Int(1), Int(1)}, {}), Error);              // disconnected
    CHECK_THROWS_AS(make_valued_quiver({Int(1)}, {{0, 1, Int(1)}}), Error);        // range
    CHECK_THROWS_AS(make_valued_quiver({Int(1), Int(1)}, {{0, 1, Int(0)}}), Error);  // weight
    // 2 does not divide 3
    CHECK_THROWS_AS(make_valued_quiver({Int(2), Int(1)}, {{0, 1, Int(3)}}), Error);

    const ValuedQuiver q = make_valued_quiver({Int(1), Int(1)}, {{0, 1, Int(1)}, {0, 1, Int(1)}});
    CHECK(q.R(0, 1) == 2);  // parallel arrows merge by summing weights
}

TEST_CASE("derived matrices satisfy the structural identities") {
    for (const auto& [series, rank] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}}) {
        const CartanDatum cd = standard(series, rank);
        CAPTURE(series);
        CHECK((cd.D * cd.C).is_symmetric());
        CHECK(cd.E + cd.E.transposed() == Int(2) * cd.D - cd.B);
        CHECK(cd.Bbar == Int(2) * IntMatrix::identity(cd.size()) - cd.C);
    }
}

TEST_CASE("G2 datum has the pinned matrices") {
    const CartanDatum cd = standard('G', 2);
    CHECK(cd.d == std::vector<Int>{Int(3), Int(1)});
    CHECK(cd.C == IntMatrix{{2, -1}, {-3, 2}});
    CHECK(cd.B == IntMatrix{{0, 3}, {3, 0}});
    CHECK(cd.Bbar == IntMatrix{{0, 1}, {3, 0}});
    CHECK(cd.E == IntMatrix{{3, -3}, {0, 1}});
}

TEST_CASE("B2 and C3 keep the Bourbaki short-root convention") {
    const CartanDatum b2 = standard('B', 2);
    CHECK(b2.d == std::vector<Int>{Int(2), Int(1)});
    CHECK(b2.dynkin.has_value());
    CHECK(b2.dynkin->str() == "B2");

    const CartanDatum b3 = standard('B', 3);
    CHECK(b3.d == std::vector<Int>{Int(2), Int(2), Int(1)});
    CHECK(b3.dynkin->str() == "B3");

    const CartanDatum c3 = standard('C', 3);
    CHECK(c3.d == std::vector<Int>{Int(1), Int(1), Int(2)});
    CHECK(c3.dynkin->str() == "C3");

    const CartanDatum f4 = standard('F', 4);
    CHECK(f4.d == std::vector<Int>{Int(2), Int(2), Int(1), Int(1)});
    CHECK(f4.dynkin->str() == "F4");
}

TEST_CASE("every named type classifies as Dynkin with its own name") {
    const std::vector<std::pair<char, std::pair<int, int>>> ranges = {
        {'A', {1, 8}}, {'B', {2, 4}}, {'C', {3, 3}}, {'D', {4, 6}},
        {'E', {6, 8}}, {'F', {4, 4}}, {'G', {2, 2}}};
    for (const auto& [series, range] : ranges) {
        for (int rank = range.first; rank <= range.second; ++rank) {
            const CartanDatum cd = standard(series, rank);
            CAPTURE(series);
            CAPTURE(rank);
            CHECK(cd.cls == Classification::Dynkin);
            REQUIRE(cd.dynkin.has_value());
            CHECK(cd.dynkin->series == series);
            CHECK(cd.dynkin->rank == rank);
        }
    }
}

TEST_CASE("affine, indefinite, and loop classes are separated") {
    // Kronecker: affine.
    const CartanDatum kron =
        build_cartan(make_valued_quiver({Int(1), Int(1)}, {{0, 1, Int(2)}}));
    CHECK(kron.cls == Classification::Affine);

    // Acyclic triangle: affine.
    const CartanDatum tri = build_cartan(make_valued_quiver(
        {Int(1), Int(1), Int(1)}, {{0, 1, Int(1)}, {1, 2, Int(1)}, {0, 2, Int(1)}}));
    CHECK(tri.cls == Classification::Affine);

    // Star with four leaves: affine.
    const CartanDatum star = build_cartan(make_valued_quiver(
        {Int(1), Int(1), Int(1), Int(1), Int(1)},
        {{0, 4, Int(1)}, {1, 4, Int(1)}, {2, 4, Int(1)}, {3, 4, Int(1)}}));
    CHECK(star.cls == Classification::Affine);

    // Three parallel arrows: indefinite.
    const CartanDatum wild =
        build_cartan(make_valued_quiver({Int(1), Int(1)}, {{0, 1, Int(3)}}));
    CHECK(wild.cls == Classification::Indefinite);

    // A loop forces the generalized class regardless of the rest.
    const CartanDatum loop = build_cartan(make_valued_quiver({Int(1)}, {{0, 0, Int(1)}}));
    CHECK(loop.cls == Classification::BorcherdsWithLoops);
    const CartanDatum loopy = build_cartan(
        make_valued_quiver({Int(1), Int(1)}, {{0, 0, Int(1)}, {0, 1, Int(1)}}));
    CHECK(loopy.cls == Classification::BorcherdsWithLoops);
}

TEST_CASE("cartan matrix round trip and minimal symmetrizers") {
    // Minimal symmetrizer is computed when omitted.
    CHECK(standard('G', 2).d == std::vector<Int>{Int(3), Int(1)});
    CHECK(standard('B', 2).d == std::vector<Int>{Int(2), Int(1)});

    // Scaled symmetrizers are accepted verbatim.
    const CartanDatum scaled =
        from_cartan_matrix(standard_cartan('B', 2), std::vector<Int>{Int(4), Int(2)});
    CHECK(scaled.d == std::vector<Int>{Int(4), Int(2)});
    CHECK(scaled.cls == Classification::Dynkin);

    // Round trip: the datum's C reproduces itself.
    const CartanDatum f4 = standard('F', 4);
    const CartanDatum again = from_cartan_matrix(f4.C, f4.d);
    CHECK(again.C == f4.C);
    CHECK(again.B == f4.B);
}

TEST_CASE("cartan matrix validation rejects malformed input") {
    CHECK_THROWS_AS(from_cartan_matrix(IntMatrix{{2, -1}, {0, 2}}), Error);  // zero pattern
    CHECK_THROWS_AS(from_cartan_matrix(IntMatrix{{2, 1}, {1, 2}}), Error);   // positive off-diag
    CHECK_THROWS_AS(from_cartan_matrix(IntMatrix{{3, -1}, {-1, 2}}), Error);  // odd diagonal
    CHECK_THROWS_AS(from_cartan_matrix(IntMatrix{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}),
                    Error);  // disconnected
    // Not symmetrizable: ratio product around the 3-cycle differs from 1.
    CHECK_THROWS_AS(from_cartan_matrix(IntMatrix{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), Error);
    // Wrong explicit symmetrizer.
    CHECK_THROWS_AS(from_cartan_matrix(standard_cartan('G', 2), std::vector<Int>{Int(1), Int(1)}),
                    Error);
}

TEST_CASE("loops survive the cartan matrix round trip") {
    const CartanDatum loop = build_cartan(make_valued_quiver({Int(1)}, {{0, 0, Int(1)}}));
    CHECK(loop.C == IntMatrix{{0}});
    const CartanDatum back = from_cartan_matrix(loop.C);
    CHECK(back.cls == Classification::BorcherdsWithLoops);
    CHECK(back.B == IntMatrix{{2}});
}

TEST_CASE("arrow reversal keeps weights and flips orientation") {
    const ValuedQuiver q = make_valued_quiver({Int(2), Int(1)}, {{0, 1, Int(2)}});
    const ValuedQuiver r = reverse_all_arrows(q);
    CHECK(r.R(1, 0) == 2);
    CHECK(r.R(0, 1) == 0);
    const ValuedQuiver one = reverse_arrows(q, {{0, 1}});
    CHECK(one.R(1, 0) == 2);
    CHECK_THROWS_AS(reverse_arrows(q, {{1, 0}}), Error);  // no such arrow

    const CartanDatum cd = build_cartan(q);
    const CartanDatum rd = build_cartan(r);
    CHECK(cd.B == rd.B);
    CHECK(cd.cls == rd.cls);
}
