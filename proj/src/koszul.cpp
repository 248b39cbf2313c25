#include "ppa/koszul.hpp"

#include <sstream>

#include "ppa/cartan.hpp"
#include "ppa/error.hpp"

namespace ppa {

KoszulDualTable koszul_dual_table(const Quiver& q) {
    const DoubleQuiver dq = double_quiver(q);
    KoszulDualTable t;
    t.n = q.n;
    t.arrow_count = dq.arrows.size();

    for (std::size_t i = 0; i < t.n; ++i) t.basis.push_back({0, "e" + std::to_string(i + 1), i, i});
    for (const Arrow& a : dq.arrows) t.basis.push_back({1, a.label, a.from, a.to});
    for (std::size_t i = 0; i < t.n; ++i) t.basis.push_back({2, "z" + std::to_string(i + 1), i, i});

    const std::size_t m = t.basis.size();
    t.table.assign(m, std::vector<KoszulProduct>(m));

    auto set = [&](std::size_t x, std::size_t y, int coeff, std::size_t idx) {
        t.table[x][y] = {coeff, idx};
    };

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            const KoszulBasisElement& bx = t.basis[x];
            const KoszulBasisElement& by = t.basis[y];
            if (bx.end != by.start) continue;  // non-composable products vanish
            const int deg = bx.degree + by.degree;
            if (deg > 2) continue;
            if (bx.degree == 0) {
                set(x, y, 1, y);
                continue;
            }
            if (by.degree == 0) {
                set(x, y, 1, x);
                continue;
            }
            // Degree 1 times degree 1: only a.a* and a*.a survive. Both land
            // on z at the first factor's source: s(a) for a.a*, t(a) for a*.a.
            const std::size_t ka = x - t.n;
            const std::size_t kb = y - t.n;
            if (dq.dual(ka) != kb) continue;
            set(x, y, dq.is_dual(ka) ? -1 : +1, t.z_index(dq.arrows[ka].from));
        }
    }
    return t;
}

KoszulCheckReport koszul_associativity_check(const KoszulDualTable& t) {
    KoszulCheckReport rep;
    const std::size_t m = t.basis.size();
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            for (std::size_t z = 0; z < m; ++z) {
                const KoszulProduct xy = t.table[x][y];
                KoszulProduct left{0, 0};
                if (xy.coeff != 0) {
                    left = t.table[xy.index][z];
                    left.coeff *= xy.coeff;
                }
                const KoszulProduct yz = t.table[y][z];
                KoszulProduct right{0, 0};
                if (yz.coeff != 0) {
                    right = t.table[x][yz.index];
                    right.coeff *= yz.coeff;
                }
                const bool equal = (left.coeff == right.coeff) &&
                                   (left.coeff == 0 || left.index == right.index);
                if (equal) continue;
                rep.pass = false;
                std::ostringstream os;
                os << "associativity breaks on (" << t.basis[x].name << ", " << t.basis[y].name
                   << ", " << t.basis[z].name << ")";
                rep.message = os.str();
                return rep;
            }
        }
    }
    rep.message = "all basis triples associate";
    return rep;
}

KoszulCheckReport koszul_sign_check(const KoszulDualTable& t, const DoubleQuiver& dq) {
    KoszulCheckReport rep;
    auto expect = [&](bool ok, const std::string& what) {
        if (ok || !rep.pass) return;
        rep.pass = false;
        rep.message = what;
    };

    for (std::size_t ka = 0; ka < t.arrow_count && rep.pass; ++ka) {
        for (std::size_t kb = 0; kb < t.arrow_count && rep.pass; ++kb) {
            const KoszulProduct p = t.table[t.arrow_index(ka)][t.arrow_index(kb)];
            const std::string names = dq.arrows[ka].label + "." + dq.arrows[kb].label;
            if (dq.arrows[ka].to != dq.arrows[kb].from) {
                expect(p.coeff == 0, names + " should vanish (not composable)");
            } else if (!dq.is_dual(ka) && kb == dq.dual(ka)) {
                expect(p.coeff == 1 && p.index == t.z_index(dq.arrows[ka].from),
                       names + " should be z at the source");
            } else if (dq.is_dual(ka) && kb == dq.dual(ka)) {
                expect(p.coeff == -1 && p.index == t.z_index(dq.arrows[kb].to),
                       names + " should be minus z at the target");
            } else {
                expect(p.coeff == 0, names + " should vanish (mixed arrows)");
            }
        }
    }
    if (rep.pass) rep.message = "arrow products match the pinned signs";
    return rep;
}

QuadraticDualReport quadratic_dual_degree3_check(const Quiver& q, const FieldMode& field) {
    {
        const CartanDatum cd = build_cartan(to_valued(q));
        if (cd.cls == Classification::Dynkin) {
            fail(Err::DynkinNotSupported,
                 "degree-3 spanning holds only beyond finite type; Dynkin input is refused");
        }
    }

    QuadraticDualReport rep;
    const DoubleQuiver dq = double_quiver(q);
    OracleOptions opt;
    opt.field = field;
    PathEnumerator paths(dq, opt);
    const PathEnumerator::Level& lvl2 = paths.level(2);
    const PathEnumerator::Level& lvl3 = paths.level(3);
    rep.pair_count = lvl2.paths.size();

    // Pairing values: +e_v on a.a* (v the source), -e_v on a*.a (v the
    // target), 0 elsewhere. Surjectivity needs a nonzero value at every
    // vertex.
    auto pairing_sign = [&](const std::vector<std::size_t>& seq) -> int {
        if (dq.dual(seq[0]) != seq[1]) return 0;
        return dq.is_dual(seq[0]) ? -1 : +1;
    };

    std::vector<char> hit(dq.n, 0);
    for (const auto& seq : lvl2.paths) {
        if (pairing_sign(seq) != 0) hit[dq.arrows[seq[0]].from] = 1;
    }
    for (std::size_t v = 0; v < dq.n; ++v) {
        if (hit[v]) continue;
        rep.pass = false;
        rep.message = "pairing misses vertex " + std::to_string(v + 1);
        return rep;
    }

    // Kernel basis: zero-pairing paths as they stand; within each vertex
    // block, differences that cancel the signs. Every element is supported on
    // a single (start, end) block.
    struct KernelElement {
        std::size_t start = 0, end = 0;
        std::vector<std::pair<std::size_t, int>> terms;  // (path id in level 2, coeff)
    };
    std::vector<KernelElement> kernel;
    std::vector<std::optional<std::pair<std::size_t, int>>> anchor(dq.n);
    for (std::size_t pid = 0; pid < lvl2.paths.size(); ++pid) {
        const int sign = pairing_sign(lvl2.paths[pid]);
        const std::size_t s = lvl2.start[pid];
        if (sign == 0) {
            kernel.push_back({s, lvl2.end[pid], {{pid, 1}}});
            continue;
        }
        if (!anchor[s]) {
            anchor[s] = std::make_pair(pid, sign);
            continue;
        }
        const auto [apid, asign] = *anchor[s];
        kernel.push_back({s, s, {{pid, asign}, {apid, -sign}}});
    }
    rep.kernel_dim = kernel.size();
    if (rep.kernel_dim != rep.pair_count - dq.n) {
        rep.pass = false;
        rep.message = "kernel dimension " + std::to_string(rep.kernel_dim) + " is not pairs - n";
        return rep;
    }

    // Degree-3 span: gamma x kernel and kernel x gamma, grouped by the target
    // block of length-3 paths; full span means full rank in every block.
    std::vector<std::vector<std::vector<IntVec>>> rows(
        dq.n, std::vector<std::vector<IntVec>>(dq.n));
    auto add_row = [&](std::size_t i, std::size_t j, IntVec row) {
        rows[i][j].push_back(std::move(row));
    };

    for (const KernelElement& ke : kernel) {
        for (std::size_t k = 0; k < dq.arrows.size(); ++k) {
            const Arrow& g = dq.arrows[k];
            if (g.to == ke.start) {
                const std::size_t i = g.from, j = ke.end;
                IntVec row(lvl3.block_size(i, j), Int(0));
                for (const auto& [pid, coeff] : ke.terms) {
                    std::vector<std::size_t> seq{k};
                    seq.insert(seq.end(), lvl2.paths[pid].begin(), lvl2.paths[pid].end());
                    row[lvl3.pos_in_block.at(seq)] += coeff;
                }
                add_row(i, j, std::move(row));
            }
            if (g.from == ke.end) {
                const std::size_t i = ke.start, j = g.to;
                IntVec row(lvl3.block_size(i, j), Int(0));
                for (const auto& [pid, coeff] : ke.terms) {
                    std::vector<std::size_t> seq = lvl2.paths[pid];
                    seq.push_back(k);
                    row[lvl3.pos_in_block.at(seq)] += coeff;
                }
                add_row(i, j, std::move(row));
            }
        }
    }

    for (std::size_t i = 0; i < dq.n; ++i) {
        for (std::size_t j = 0; j < dq.n; ++j) {
            const std::size_t full = lvl3.block_size(i, j);
            if (full == 0) continue;
            const std::size_t rank = span_rank(rows[i][j], full, field);
            if (rank == full) continue;
            rep.pass = false;
            std::ostringstream os;
            os << "length-3 block (" << i + 1 << "," << j + 1 << ") has rank " << rank << " of "
               << full;
            rep.message = os.str();
            return rep;
        }
    }
    rep.message = "pairing surjective and the kernel spans every length-3 component";
    return rep;
}

}  // namespace ppa
