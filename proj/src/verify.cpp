#include "ppa/verify.hpp"

#include <memory>
#include <set>
#include <sstream>

#include "ppa/error.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/koszul.hpp"
#include "ppa/weyl.hpp"

namespace ppa {

namespace {

std::string matrix_brief(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace

VerifyReport run_verify(const std::string& name, const CartanDatum& datum,
                        const std::optional<Quiver>& quiver, const VerifyOptions& opts) {
    if (!opts.field.exact()) {
        fail(Err::PrimeModeRefused, "verification verdicts require exact arithmetic");
    }

    CartanDatum cd = datum;
    if (opts.perturb_bbar) {
        const auto [pi, pj] = *opts.perturb_bbar;
        if (pi >= cd.size() || pj >= cd.size()) fail(Err::BadInput, "perturbation index out of range");
        cd.Bbar(pi, pj) += 1;
    }

    VerifyReport rep;
    rep.input = name;
    const std::size_t n = cd.size();

    // Each check recomputes what it claims from the (possibly perturbed)
    // datum; a thrown Error fails the check instead of aborting the run.
    auto run_check = [&](const std::string& check_name, auto&& body) {
        CheckResult res;
        res.name = check_name;
        try {
            auto [ok, details] = body();
            res.status = ok ? "pass" : "fail";
            res.details = details;
        } catch (const Error& e) {
            res.status = "fail";
            res.details = e.what();
        }
        if (res.status == "fail") rep.pass = false;
        rep.checks.push_back(res);
    };
    auto skip = [&](const std::string& check_name, const std::string& why) {
        rep.checks.push_back({check_name, "skipped", why});
    };

    run_check("classification", [&]() -> std::pair<bool, std::string> {
        const Classification fresh = classify(cd);
        if (fresh != cd.cls) {
            return {false, std::string("stored ") + classification_name(cd.cls) +
                               ", minors say " + classification_name(fresh)};
        }
        std::string details = classification_name(fresh);
        if (cd.cls == Classification::Dynkin) {
            // Recompute the name from the Cartan matrix alone so this stays a
            // statement about C; the Bbar-facing checks own that field.
            const CartanDatum canon = from_cartan_matrix(cd.C, cd.d);
            const DynkinName dn = dynkin_type(canon);
            if (!cd.dynkin || !(dn == *cd.dynkin)) return {false, "named type mismatch"};
            details += "(" + dn.str() + ")";
        }
        return {true, details};
    });

    const bool dynkin = cd.cls == Classification::Dynkin;

    // Coxeter-side data; independent of Bbar, so the negative control cannot
    // disturb it.
    std::optional<CoxeterData> cox;
    std::optional<RootSystem> rs;
    std::optional<TauOrbits> tau;
    std::string coxeter_error;
    if (dynkin) {
        try {
            cox = coxeter_element(cd);
            rs = enumerate_roots(cd);
            tau = nakayama_permutation(cd, *cox, *rs);
        } catch (const Error& e) {
            coxeter_error = e.what();
        }
    }

    if (dynkin && cox) {
        const std::size_t h = cox->h;

        run_check("vieta-truncation", [&]() -> std::pair<bool, std::string> {
            const IntMatrix v = vieta_matrix(cd, h - 1);
            if (!v.is_zero()) {
                return {false, "V_" + std::to_string(h - 1) + " = " + matrix_brief(v)};
            }
            return {true, "V_" + std::to_string(h - 1) + " = 0"};
        });

        run_check("coxeter-order", [&]() -> std::pair<bool, std::string> {
            IntMatrix power = IntMatrix::identity(n);
            for (std::size_t t = 1; t < h; ++t) {
                power = power * cox->cox;
                if (power == IntMatrix::identity(n)) {
                    return {false, "order divides " + std::to_string(t)};
                }
            }
            power = power * cox->cox;
            if (power != IntMatrix::identity(n)) return {false, "cox^h is not the identity"};
            return {true, "h = " + std::to_string(h)};
        });

        run_check("root-count", [&]() -> std::pair<bool, std::string> {
            const std::size_t count = rs->size();
            if (count != n * h) {
                return {false, std::to_string(count) + " roots, expected n*h = " +
                                   std::to_string(n * h)};
            }
            return {true, std::to_string(count) + " = n*h"};
        });

        run_check("coxeter-orbits", [&]() -> std::pair<bool, std::string> {
            const auto orbits = coxeter_orbits(*rs, *cox);
            if (orbits.size() != n) {
                return {false, std::to_string(orbits.size()) + " orbits, expected " +
                                   std::to_string(n)};
            }
            for (const auto& orbit : orbits) {
                if (orbit.size() != h) {
                    return {false, "orbit of size " + std::to_string(orbit.size()) +
                                       ", expected h = " + std::to_string(h)};
                }
            }
            return {true, std::to_string(n) + " orbits of size " + std::to_string(h)};
        });

        run_check("nakayama-involution", [&]() -> std::pair<bool, std::string> {
            for (std::size_t i = 0; i < n; ++i) {
                if (tau->rho[tau->rho[i]] != i) {
                    return {false, "rho^2 moves vertex " + std::to_string(i + 1)};
                }
            }
            return {true, "rho is an involution"};
        });

        run_check("tau-orbit-sum", [&]() -> std::pair<bool, std::string> {
            std::size_t sum = 0;
            for (std::size_t mi : tau->m) sum += mi;
            if (2 * sum != rs->size()) {
                return {false, "sum m_i = " + std::to_string(sum) + ", expected |Phi|/2 = " +
                                   std::to_string(rs->size() / 2)};
            }
            return {true, "sum m_i = |Phi|/2 = " + std::to_string(sum)};
        });

        run_check("positive-root-walk", [&]() -> std::pair<bool, std::string> {
            std::set<Root> seen;
            std::size_t visited = 0;
            for (const auto& walk : tau->walks) {
                for (const Root& x : walk) {
                    for (const Int& entry : x) {
                        if (entry < 0) return {false, "walk leaves the positive cone"};
                    }
                    if (!seen.insert(x).second) return {false, "walk repeats a root"};
                    ++visited;
                }
            }
            if (2 * visited != rs->size()) {
                return {false, "walk visits " + std::to_string(visited) + " of " +
                                   std::to_string(rs->size() / 2) + " positive roots"};
            }
            return {true, "each positive root visited exactly once"};
        });

        run_check("socle-matrix", [&]() -> std::pair<bool, std::string> {
            socle_matrix(cd, *tau, h);  // throws SocleMismatch on bad placement
            return {true, "D V_{h-2} places d_i at (i, rho(i))"};
        });

        run_check("hilbert-identity", [&]() -> std::pair<bool, std::string> {
            IntMatrix expected(n, n);
            for (std::size_t i = 0; i < n; ++i) expected(i, tau->rho[i]) = cd.d[i];
            const HilbertIdentityReport hr = hilbert_polynomial_identity(cd, expected, h);
            return {hr.pass, hr.message};
        });
    } else if (dynkin) {
        run_check("coxeter-order",
                  [&]() -> std::pair<bool, std::string> { return {false, coxeter_error}; });
    }

    run_check("table-symmetry", [&]() -> std::pair<bool, std::string> {
        VietaCache cache(cd.Bbar);
        for (std::size_t r = 0; r <= opts.max_degree; ++r) {
            const IntMatrix m = cd.D * cache.at(r);
            if (!m.is_symmetric()) {
                return {false, "D V_" + std::to_string(r) + " is not symmetric"};
            }
        }
        return {true, "D V_r symmetric for r <= " + std::to_string(opts.max_degree)};
    });

    run_check("sincerity", [&]() -> std::pair<bool, std::string> {
        const GradedDimTable table =
            dynkin ? graded_dim_table(cd) : graded_dim_table(cd, opts.max_degree);
        const SincerityReport sr = sincerity_check(cd, table);
        std::string details = sr.message;
        for (const std::string& note : sr.notes) details += "; note: " + note;
        return {sr.pass, details};
    });

    if (!quiver) return rep;

    // Oracle-side checks share one oracle so block ranks are computed once.
    OracleOptions oracle_opts;
    oracle_opts.max_degree = opts.max_degree;
    oracle_opts.degree_cap = std::max<std::size_t>(opts.max_degree + 2, 8);
    oracle_opts.field = opts.field;
    PathOracle oracle(*quiver, oracle_opts);
    VietaCache cache(cd.Bbar);

    std::optional<std::size_t> h;
    if (dynkin && cox) h = cox->h;

    run_check("oracle-equivalence", [&]() -> std::pair<bool, std::string> {
        std::size_t top = opts.max_degree;
        if (h) top = std::min(top, *h - 2);
        for (std::size_t r = 0; r <= top; ++r) {
            const IntMatrix got = oracle.dims(r);
            const IntMatrix want = cd.D * cache.at(r);
            if (got != want) {
                return {false, "degree " + std::to_string(r) + ": oracle " + matrix_brief(got) +
                                   " vs closed form " + matrix_brief(want)};
            }
        }
        return {true, "oracle matches D V_r for r <= " + std::to_string(top)};
    });

    if (h) {
        if (*h - 1 <= oracle_opts.degree_cap) {
            run_check("loewy-vanishing", [&]() -> std::pair<bool, std::string> {
                const std::size_t hi = std::min(*h + 1, oracle_opts.degree_cap);
                for (std::size_t r = *h - 1; r <= hi; ++r) {
                    if (!oracle.dims(r).is_zero()) {
                        return {false, "degree " + std::to_string(r) + " survives past the top"};
                    }
                }
                return {true, "degrees " + std::to_string(*h - 1) + ".." + std::to_string(hi) +
                                  " vanish"};
            });
        } else {
            skip("loewy-vanishing", "h - 1 exceeds the oracle degree cap");
        }
    }

    run_check("resolution-recursion", [&]() -> std::pair<bool, std::string> {
        if (opts.max_degree < 2) return {true, "no degrees in range"};
        std::size_t top = opts.max_degree - 1;
        if (h) top = std::min(top, *h - 2);
        for (std::size_t r = 1; r <= top; ++r) {
            const IntMatrix lhs = oracle.dims(r + 1) + oracle.dims(r - 1);
            const IntMatrix rhs = cd.B * oracle.dims(r);
            if (lhs != rhs) {
                return {false, "degree " + std::to_string(r) + ": " + matrix_brief(lhs) +
                                   " vs B-weighted " + matrix_brief(rhs)};
            }
        }
        return {true, "dims(r+1) + dims(r-1) = B dims(r) for r <= " + std::to_string(top)};
    });

    run_check("socle-injectivity", [&]() -> std::pair<bool, std::string> {
        if (opts.max_degree == 0) return {true, "no degrees in range"};
        std::size_t top = opts.max_degree - 1;
        if (h) {
            if (*h < 3) return {true, "no degrees below the top"};
            top = std::min(top, *h - 3);
        }
        for (std::size_t r = 0; r <= top; ++r) {
            const SocleInjectivityReport sr = oracle.socle_injectivity(r);
            if (!sr.pass) return {false, sr.message};
        }
        return {true, "no kernel through degree " + std::to_string(top)};
    });

    run_check("koszul-associativity", [&]() -> std::pair<bool, std::string> {
        const KoszulDualTable table = koszul_dual_table(*quiver);
        const KoszulCheckReport kr = koszul_associativity_check(table);
        return {kr.pass, kr.message};
    });

    run_check("koszul-signs", [&]() -> std::pair<bool, std::string> {
        const KoszulDualTable table = koszul_dual_table(*quiver);
        const KoszulCheckReport kr = koszul_sign_check(table, double_quiver(*quiver));
        return {kr.pass, kr.message};
    });

    run_check("quadratic-dual-degree3", [&]() -> std::pair<bool, std::string> {
        if (dynkin) {
            try {
                quadratic_dual_degree3_check(*quiver, opts.field);
            } catch (const Error& e) {
                if (e.code() == Err::DynkinNotSupported) {
                    return {true, "refused for Dynkin input as required"};
                }
                throw;
            }
            return {false, "Dynkin input was not refused"};
        }
        const QuadraticDualReport qr = quadratic_dual_degree3_check(*quiver, opts.field);
        return {qr.pass, qr.message};
    });

    run_check("orientation-invariance", [&]() -> std::pair<bool, std::string> {
        if (quiver->arrows.empty()) return {true, "no arrows to flip"};
        std::vector<std::string> all_labels;
        for (const Arrow& a : quiver->arrows) all_labels.push_back(a.label);
        const OrientationInvarianceReport full =
            orientation_invariance_check(*quiver, all_labels, 4, oracle_opts);
        if (!full.pass) return {false, "full reversal: " + full.message};
        const OrientationInvarianceReport single = orientation_invariance_check(
            *quiver, {quiver->arrows.front().label}, 4, oracle_opts);
        if (!single.pass) return {false, "single flip: " + single.message};
        return {true, "full reversal and single flip agree through degree 4"};
    });

    return rep;
}

}  // namespace ppa
