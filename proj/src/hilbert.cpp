#include "ppa/hilbert.hpp"

#include <cassert>
#include <sstream>

#include "ppa/error.hpp"

namespace ppa {

namespace {

// Degree cap used when hunting for the vanishing Vieta matrix in the Dynkin
// case; the Coxeter number of any rank <= 8 catalog entry is at most 30, and
// the cap only guards against misclassified data.
constexpr std::size_t kDynkinVietaCap = 4096;

}  // namespace

VietaCache::VietaCache(IntMatrix bbar) : bbar_(std::move(bbar)) {
    const std::size_t n = bbar_.rows();
    v_.push_back(IntMatrix::identity(n));
    v_.push_back(bbar_);
}

IntMatrix VietaCache::at(std::size_t r) {
    std::lock_guard<std::mutex> lock(mu_);
    while (v_.size() <= r) {
        const std::size_t k = v_.size();
        v_.push_back(bbar_ * v_[k - 1] - v_[k - 2]);
    }
    return v_[r];
}

IntMatrix vieta_matrix(const CartanDatum& cd, std::size_t r) {
    VietaCache cache(cd.Bbar);
    return cache.at(r);
}

GradedDimTable graded_dim_table(const CartanDatum& cd, std::optional<std::size_t> max_degree) {
    GradedDimTable table;
    VietaCache cache(cd.Bbar);
    const std::size_t n = cd.size();

    if (cd.cls == Classification::Dynkin) {
        std::size_t top = 0;
        bool found = false;
        for (std::size_t r = 1; r <= kDynkinVietaCap; ++r) {
            if (cache.at(r).is_zero()) {
                top = r - 1;  // top nonvanishing degree, equals h - 2
                found = true;
                break;
            }
        }
        if (!found) fail(Err::OrderNotFoundWithinCap, "no vanishing Vieta matrix found");
        table.dynkin_top = top;
        const std::size_t upto = max_degree ? *max_degree : top;
        for (std::size_t r = 0; r <= upto; ++r) {
            if (r <= top) {
                table.matrices.push_back(cd.D * cache.at(r));
            } else {
                table.matrices.push_back(IntMatrix(n, n));
            }
        }
        return table;
    }

    if (!max_degree) {
        fail(Err::NonDynkinNeedsMaxDegree,
             "graded dimensions are infinite outside the Dynkin case; pass a max degree");
    }
    for (std::size_t r = 0; r <= *max_degree; ++r) {
        table.matrices.push_back(cd.D * cache.at(r));
    }
    return table;
}

IntMatrix socle_matrix(const CartanDatum& cd, const TauOrbits& tau, std::size_t h) {
    if (cd.cls != Classification::Dynkin) fail(Err::DynkinNotSupported, "socle needs a Dynkin datum");
    if (h < 2) fail(Err::BadInput, "Coxeter number below 2");
    const std::size_t n = cd.size();
    IntMatrix socle = cd.D * vieta_matrix(cd, h - 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Int expected = (j == tau.rho[i]) ? cd.d[i] : Int(0);
            if (socle(i, j) != expected) {
                std::ostringstream os;
                os << "socle entry (" << i + 1 << "," << j + 1 << ") = " << socle(i, j)
                   << ", expected " << expected;
                fail(Err::SocleMismatch, os.str());
            }
        }
    }
    return socle;
}

HilbertIdentityReport hilbert_polynomial_identity(const CartanDatum& cd, const IntMatrix& socle,
                                                  std::size_t h) {
    HilbertIdentityReport rep;
    if (cd.cls != Classification::Dynkin) fail(Err::DynkinNotSupported, "identity needs a Dynkin datum");
    const std::size_t n = cd.size();
    VietaCache cache(cd.Bbar);

    // H(t) * (I - Bbar t + I t^2) has coefficients
    //   r=0:       D V_0
    //   r=1:       D V_1 - D V_0 Bbar
    //   2<=r<=h-2: D V_r - D V_{r-1} Bbar + D V_{r-2}
    //   r=h-1:     -D V_{h-2} Bbar + D V_{h-3}
    //   r=h:       D V_{h-2}
    // and the right side is D at degree 0, socle at degree h, zero between.
    auto dv = [&](std::size_t r) { return cd.D * cache.at(r); };

    auto check = [&](std::size_t r, const IntMatrix& got, const IntMatrix& want) {
        if (got == want) return true;
        for (std::size_t i = 0; i < n && rep.pass; ++i) {
            for (std::size_t j = 0; j < n && rep.pass; ++j) {
                if (got(i, j) != want(i, j)) {
                    rep.pass = false;
                    rep.bad_degree = r;
                    rep.bad_i = i;
                    rep.bad_j = j;
                    std::ostringstream os;
                    os << "coefficient of t^" << r << " differs at entry (" << i + 1 << ","
                       << j + 1 << "): " << got(i, j) << " vs " << want(i, j);
                    rep.message = os.str();
                }
            }
        }
        return rep.pass;
    };

    const IntMatrix zero(n, n);
    if (!check(0, dv(0), cd.D)) return rep;
    if (h == 2) {
        // Rank-one-style degenerate case: H = D V_0, remaining coefficients
        // are -D Bbar at t^1 and D at t^2.
        if (!check(1, zero - dv(0) * cd.Bbar, zero)) return rep;
        if (!check(2, dv(0), socle)) return rep;
        rep.message = "all coefficients match";
        return rep;
    }
    if (!check(1, dv(1) - dv(0) * cd.Bbar, zero)) return rep;
    for (std::size_t r = 2; r + 1 <= h - 1; ++r) {
        if (!check(r, dv(r) - dv(r - 1) * cd.Bbar + dv(r - 2), zero)) return rep;
    }
    if (!check(h - 1, dv(h - 3) - dv(h - 2) * cd.Bbar, zero)) return rep;
    if (!check(h, dv(h - 2), socle)) return rep;
    rep.message = "all coefficients match";
    return rep;
}

SincerityReport sincerity_check(const CartanDatum& cd, const GradedDimTable& table) {
    SincerityReport rep;
    const std::size_t n = cd.size();

    auto row_zero = [&](const IntMatrix& m, std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != 0) return false;
        }
        return true;
    };

    std::size_t upto = table.max_degree();
    if (table.dynkin_top && upto > *table.dynkin_top) upto = *table.dynkin_top;

    for (std::size_t r = 0; r <= upto; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!row_zero(table.matrices[r], i)) continue;
            std::ostringstream os;
            os << "row " << i + 1 << " vanishes in degree " << r;
            if (r <= 1 && !table.dynkin_top) {
                rep.notes.push_back(os.str());
            } else {
                rep.pass = false;
                rep.message = os.str();
                return rep;
            }
        }
    }
    rep.message = "every vertex row stays nonzero through the checked degrees";
    return rep;
}

}  // namespace ppa
