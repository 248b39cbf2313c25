#include "properties.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/weyl.hpp"

namespace ppa::testsupport {

namespace {

Int bilinear(const IntVec& x, const IntMatrix& g, const IntVec& y) {
    Int total(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) total += x[i] * g(i, j) * y[j];
    }
    return total;
}

}  // namespace

PropertyResult run_property_suite(std::uint64_t seed, std::size_t cases) {
    PropertyResult res;
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto record = [&](std::size_t case_id, const char* what, bool ok) {
        if (ok || !res.pass) return;
        res.pass = false;
        std::ostringstream os;
        os << "case " << case_id << ": " << what;
        res.first_failure = os.str();
    };

    for (std::size_t case_id = 0; case_id < cases; ++case_id) {
        const int n = pick(1, 5);
        std::vector<Int> d;
        for (int i = 0; i < n; ++i) d.emplace_back(pick(1, 3));

        // Connected loop-free multigraph: a random spanning tree plus a few
        // extra edges; arrow weights are random multiples of the minimal
        // admissible weight lcm(d_i, d_j).
        std::vector<std::pair<int, int>> edges;
        for (int k = 1; k < n; ++k) edges.push_back({pick(0, k - 1), k});
        const int extra = pick(0, n);
        for (int k = 0; k < extra; ++k) {
            const int i = pick(0, n - 1), j = pick(0, n - 1);
            if (i == j) continue;
            edges.push_back({i, j});
        }
        std::vector<ValuedArrow> arrows;
        for (const auto& [u, v] : edges) {
            const Int weight = lcm(d[u], d[v]) * Int(pick(1, 3));
            if (pick(0, 1)) {
                arrows.push_back({u, v, weight});
            } else {
                arrows.push_back({v, u, weight});
            }
        }

        const ValuedQuiver vq = make_valued_quiver(d, arrows);
        const CartanDatum cd = build_cartan(vq);
        ++res.cases_run;

        record(case_id, "E + E^T = 2D - B",
               cd.E + cd.E.transposed() == Int(2) * cd.D - cd.B);

        {
            VietaCache cache(cd.Bbar);
            bool all_symmetric = true;
            for (std::size_t r = 0; r <= 6; ++r) {
                if (!(cd.D * cache.at(r)).is_symmetric()) all_symmetric = false;
            }
            record(case_id, "D V_r symmetric for r <= 6", all_symmetric);
        }

        auto random_vec = [&]() {
            IntVec x;
            for (int i = 0; i < n; ++i) x.emplace_back(pick(-5, 5));
            return x;
        };

        {
            bool involutive = true;
            for (int i = 0; i < n && involutive; ++i) {
                const IntVec x = random_vec();
                const std::size_t si = static_cast<std::size_t>(i);
                involutive = simple_reflection(cd, si, simple_reflection(cd, si, x)) == x;
            }
            record(case_id, "s_i involutive", involutive);
        }

        {
            const IntMatrix g = cd.D * cd.C;
            bool invariant = true;
            for (int i = 0; i < n && invariant; ++i) {
                const IntVec x = random_vec();
                const IntVec y = random_vec();
                const std::size_t si = static_cast<std::size_t>(i);
                invariant = bilinear(x, g, y) ==
                            bilinear(simple_reflection(cd, si, x), g,
                                     simple_reflection(cd, si, y));
            }
            record(case_id, "(x, y) invariant under reflections", invariant);
        }

        {
            const CartanDatum reversed = build_cartan(reverse_all_arrows(vq));
            bool stable = reversed.cls == cd.cls;
            if (stable && cd.dynkin && !(reversed.dynkin && *reversed.dynkin == *cd.dynkin)) {
                stable = false;
            }
            record(case_id, "classification stable under reversal", stable);
        }
    }
    return res;
}

}  // namespace ppa::testsupport
