#include "ppa/path_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>

#include "ppa/error.hpp"

namespace ppa {

namespace {

std::string path_string(const DoubleQuiver& dq, const std::vector<std::size_t>& seq,
                        std::size_t start) {
    if (seq.empty()) {
        std::ostringstream os;
        os << "e" << start + 1;
        return os.str();
    }
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) out += ".";
        out += dq.arrows[seq[k]].label;
    }
    return out;
}

}  // namespace

Quiver make_quiver(std::size_t n, std::vector<Arrow> arrows) {
    if (n == 0) fail(Err::BadInput, "quiver needs at least one vertex");
    std::set<std::string> seen;
    for (const Arrow& a : arrows) {
        if (a.from >= n || a.to >= n) fail(Err::BadInput, "arrow endpoint out of range");
        if (a.label.empty()) fail(Err::BadInput, "arrow label must be nonempty");
        if (a.label.find('*') != std::string::npos) {
            fail(Err::BadInput, "arrow label '" + a.label + "' uses '*', reserved for duals");
        }
        if (!seen.insert(a.label).second) fail(Err::DuplicateLabel, "arrow label '" + a.label + "' repeats");
    }
    // Connectivity over the underlying graph.
    std::vector<char> vis(n, 0);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    vis[0] = 1;
    while (!bfs.empty()) {
        const std::size_t v = bfs.front();
        bfs.pop();
        for (const Arrow& a : arrows) {
            if (a.from == v && !vis[a.to]) vis[a.to] = 1, bfs.push(a.to);
            if (a.to == v && !vis[a.from]) vis[a.from] = 1, bfs.push(a.from);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!vis[v]) fail(Err::DisconnectedQuiver, "quiver is not connected");
    }
    return Quiver{n, std::move(arrows)};
}

ValuedQuiver to_valued(const Quiver& q) {
    std::vector<Int> d(q.n, Int(1));
    std::vector<ValuedArrow> arrows;
    arrows.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) {
        arrows.push_back({static_cast<int>(a.from), static_cast<int>(a.to), Int(1)});
    }
    return make_valued_quiver(d, arrows);
}

Quiver reverse_arrows(const Quiver& q, const std::vector<std::string>& labels) {
    Quiver out = q;
    for (const std::string& label : labels) {
        bool found = false;
        for (Arrow& a : out.arrows) {
            if (a.label != label) continue;
            std::swap(a.from, a.to);
            found = true;
            break;
        }
        if (!found) fail(Err::BadInput, "no arrow labeled '" + label + "' to reverse");
    }
    return out;
}

Quiver reverse_all_arrows(const Quiver& q) {
    Quiver out = q;
    for (Arrow& a : out.arrows) std::swap(a.from, a.to);
    return out;
}

DoubleQuiver double_quiver(const Quiver& q) {
    DoubleQuiver dq;
    dq.n = q.n;
    dq.original_count = q.arrows.size();
    dq.arrows = q.arrows;
    for (const Arrow& a : q.arrows) dq.arrows.push_back({a.to, a.from, a.label + "*"});
    return dq;
}

RelationSet preprojective_relations(const DoubleQuiver& dq) {
    RelationSet rels;
    rels.at_vertex.resize(dq.n);
    for (std::size_t k = 0; k < dq.original_count; ++k) {
        const Arrow& a = dq.arrows[k];
        rels.at_vertex[a.from].push_back({k, dq.dual(k), +1});
        rels.at_vertex[a.to].push_back({dq.dual(k), k, -1});
    }
    return rels;
}

PathEnumerator::PathEnumerator(const DoubleQuiver& dq, const OracleOptions& opt)
    : dq_(dq), opt_(opt) {
    extension_order_.resize(dq.arrows.size());
    for (std::size_t k = 0; k < extension_order_.size(); ++k) extension_order_[k] = k;
    std::sort(extension_order_.begin(), extension_order_.end(), [&](std::size_t x, std::size_t y) {
        return opt_.reverse_enumeration ? dq.arrows[x].label > dq.arrows[y].label
                                        : dq.arrows[x].label < dq.arrows[y].label;
    });

    Level trivial;
    trivial.block.assign(dq.n, std::vector<std::vector<std::size_t>>(dq.n));
    for (std::size_t v = 0; v < dq.n; ++v) {
        trivial.paths.push_back({});
        trivial.start.push_back(v);
        trivial.end.push_back(v);
        trivial.block[v][v].push_back(v);
    }
    levels_.push_back(std::move(trivial));
}

const PathEnumerator::Level& PathEnumerator::level(std::size_t r) {
    while (levels_.size() <= r) {
        const Level& prev = levels_.back();
        Level next;
        next.block.assign(dq_.n, std::vector<std::vector<std::size_t>>(dq_.n));
        for (std::size_t pid = 0; pid < prev.paths.size(); ++pid) {
            for (std::size_t k : extension_order_) {
                const Arrow& a = dq_.arrows[k];
                if (a.from != prev.end[pid]) continue;
                std::vector<std::size_t> seq = prev.paths[pid];
                seq.push_back(k);
                const std::size_t id = next.paths.size();
                next.start.push_back(prev.start[pid]);
                next.end.push_back(a.to);
                auto& blk = next.block[prev.start[pid]][a.to];
                next.pos_in_block.emplace(seq, blk.size());
                blk.push_back(id);
                next.paths.push_back(std::move(seq));
            }
        }
        for (std::size_t i = 0; i < dq_.n; ++i) {
            for (std::size_t j = 0; j < dq_.n; ++j) {
                if (next.block[i][j].size() > opt_.path_count_cap) {
                    fail(Err::PathCountCapExceeded, "path basis block exceeds the configured cap");
                }
            }
        }
        levels_.push_back(std::move(next));
    }
    return levels_[r];
}

PathOracle::PathOracle(Quiver q, OracleOptions opt)
    : q_(std::move(q)),
      opt_(opt),
      dq_(double_quiver(q_)),
      rels_(preprojective_relations(dq_)),
      paths_(dq_, opt_) {
    // The direct oracle is inherently simply laced; to_valued also validates
    // connectivity and shares the datum conventions.
    (void)to_valued(q_);
}

std::size_t PathOracle::path_count(std::size_t r, std::size_t i, std::size_t j) {
    return paths_.level(r).block_size(i, j);
}

std::vector<IntVec> PathOracle::relation_rows(std::size_t r, std::size_t i, std::size_t j) {
    std::vector<IntVec> rows;
    if (r < 2) return rows;
    const PathEnumerator::Level& top = paths_.level(r);
    const std::size_t width = top.block_size(i, j);
    if (width == 0) return rows;

    for (std::size_t v = 0; v < dq_.n; ++v) {
        if (rels_.at_vertex[v].empty()) continue;
        for (std::size_t s = 0; s + 2 <= r; ++s) {
            const PathEnumerator::Level& pre = paths_.level(s);
            const PathEnumerator::Level& suf = paths_.level(r - 2 - s);
            for (std::size_t pid : pre.block[i][v]) {
                for (std::size_t qid : suf.block[v][j]) {
                    IntVec row(width, Int(0));
                    for (const RelationTerm& term : rels_.at_vertex[v]) {
                        std::vector<std::size_t> seq = pre.paths[pid];
                        seq.push_back(term.first);
                        seq.push_back(term.second);
                        seq.insert(seq.end(), suf.paths[qid].begin(), suf.paths[qid].end());
                        auto it = top.pos_in_block.find(seq);
                        assert(it != top.pos_in_block.end());
                        row[it->second] += term.coeff;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

std::size_t PathOracle::relation_rank(std::size_t r, std::size_t i, std::size_t j) {
    const auto key = std::make_tuple(r, i, j);
    auto it = rank_memo_.find(key);
    if (it != rank_memo_.end()) return it->second;
    const std::size_t width = paths_.level(r).block_size(i, j);
    const std::size_t rank = span_rank(relation_rows(r, i, j), width, opt_.field);
    rank_memo_.emplace(key, rank);
    return rank;
}

IntMatrix PathOracle::dims(std::size_t r) {
    if (r > opt_.degree_cap) fail(Err::DegreeCapExceeded, "degree exceeds the oracle cap");
    IntMatrix out(dq_.n, dq_.n);
    for (std::size_t i = 0; i < dq_.n; ++i) {
        for (std::size_t j = 0; j < dq_.n; ++j) {
            out(i, j) = Int(path_count(r, i, j)) - Int(relation_rank(r, i, j));
        }
    }
    return out;
}

GradedDimTable PathOracle::table(std::size_t max_degree) {
    GradedDimTable t;
    t.source = "oracle";
    for (std::size_t r = 0; r <= max_degree; ++r) t.matrices.push_back(dims(r));
    return t;
}

SocleInjectivityReport PathOracle::socle_injectivity(std::size_t r) {
    SocleInjectivityReport rep;
    rep.degree = r;
    if (r > opt_.degree_cap) fail(Err::DegreeCapExceeded, "degree exceeds the oracle cap");

    std::vector<std::size_t> out_arrows_by_vertex_count(dq_.n, 0);
    for (const Arrow& a : dq_.arrows) ++out_arrows_by_vertex_count[a.from];

    for (std::size_t i = 0; i < dq_.n; ++i) {
        for (std::size_t j = 0; j < dq_.n; ++j) {
            const std::size_t npaths = path_count(r, i, j);
            if (npaths == 0) continue;
            const std::size_t rank_here = relation_rank(r, i, j);
            const std::size_t dim_here = npaths - rank_here;
            if (dim_here == 0) continue;

            std::vector<std::size_t> gammas;
            for (std::size_t k = 0; k < dq_.arrows.size(); ++k) {
                if (dq_.arrows[k].from == j) gammas.push_back(k);
            }
            if (gammas.empty()) {
                rep.pass = false;
                rep.kernel_dim += dim_here;
                if (rep.witness.empty()) {
                    std::ostringstream os;
                    os << "vertex " << j + 1 << " has no outgoing arrows; the whole component ("
                       << i + 1 << "," << j + 1 << ") of degree " << r << " is kernel";
                    rep.witness = os.str();
                }
                continue;
            }

            std::vector<std::size_t> offsets;
            std::size_t width = 0;
            for (std::size_t g : gammas) {
                offsets.push_back(width);
                width += path_count(r + 1, i, dq_.arrows[g].to);
            }

            std::vector<IntVec> stack;
            std::size_t sum_target_ranks = 0;
            for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
                const std::size_t tgt = dq_.arrows[gammas[gi]].to;
                sum_target_ranks += relation_rank(r + 1, i, tgt);
                for (IntVec& row : relation_rows(r + 1, i, tgt)) {
                    IntVec wide(width, Int(0));
                    std::copy(row.begin(), row.end(), wide.begin() + offsets[gi]);
                    stack.push_back(std::move(wide));
                }
            }
            const std::size_t relation_row_count = stack.size();

            const PathEnumerator::Level& base = paths_.level(r);
            for (std::size_t pid : base.block[i][j]) {
                IntVec wide(width, Int(0));
                for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
                    std::vector<std::size_t> seq = base.paths[pid];
                    seq.push_back(gammas[gi]);
                    const PathEnumerator::Level& up = paths_.level(r + 1);
                    auto it = up.pos_in_block.find(seq);
                    assert(it != up.pos_in_block.end());
                    wide[offsets[gi] + it->second] = 1;
                }
                stack.push_back(std::move(wide));
            }

            const std::size_t rank_stack = span_rank(stack, width, opt_.field);
            assert(npaths + sum_target_ranks >= rank_stack + rank_here);
            const std::size_t kernel = npaths + sum_target_ranks - rank_stack - rank_here;
            if (kernel == 0) continue;

            rep.pass = false;
            rep.kernel_dim += kernel;
            if (!rep.witness.empty()) continue;

            // Witness: a left dependency whose path-row part falls outside the
            // degree-r relation span.
            std::vector<IntVec> base_rows = relation_rows(r, i, j);
            for (const std::vector<Rat>& dep : row_dependencies(stack)) {
                std::vector<Rat> coeffs(npaths, Rat(0));
                bool any = false;
                for (std::size_t p = 0; p < npaths; ++p) {
                    coeffs[p] = dep[relation_row_count + p];
                    if (coeffs[p] != 0) any = true;
                }
                if (!any) continue;
                Int denom(1);
                for (const Rat& c : coeffs) denom = lcm(denom, Int(c.get_den()));
                IntVec candidate(npaths);
                for (std::size_t p = 0; p < npaths; ++p) {
                    Rat scaled = coeffs[p] * Rat(denom);
                    candidate[p] = scaled.get_num();
                }
                std::vector<IntVec> extended = base_rows;
                extended.push_back(candidate);
                if (span_rank(extended, npaths, opt_.field) == rank_here) continue;
                std::ostringstream os;
                os << "degree " << r << " block (" << i + 1 << "," << j + 1 << "): ";
                bool first = true;
                for (std::size_t p = 0; p < npaths; ++p) {
                    if (candidate[p] == 0) continue;
                    if (!first) os << " + ";
                    os << candidate[p] << "*" << path_string(dq_, base.paths[base.block[i][j][p]], i);
                    first = false;
                }
                os << " is killed by every arrow";
                rep.witness = os.str();
                break;
            }
        }
    }
    rep.message = rep.pass ? "right multiplication by the arrow sum is injective"
                           : ("kernel of dimension " + std::to_string(rep.kernel_dim) +
                              (rep.witness.empty() ? "" : "; " + rep.witness));
    return rep;
}

IntMatrix graded_component_dims(const Quiver& q, std::size_t r, const OracleOptions& opt) {
    PathOracle oracle(q, opt);
    return oracle.dims(r);
}

SocleInjectivityReport socle_injectivity_check(const Quiver& q, std::size_t r,
                                               const OracleOptions& opt) {
    PathOracle oracle(q, opt);
    return oracle.socle_injectivity(r);
}

OrientationInvarianceReport orientation_invariance_check(const Quiver& q,
                                                         const std::vector<std::string>& flips,
                                                         std::size_t max_degree,
                                                         const OracleOptions& opt) {
    OrientationInvarianceReport rep;
    PathOracle left(q, opt);
    PathOracle right(reverse_arrows(q, flips), opt);
    for (std::size_t r = 0; r <= max_degree; ++r) {
        const IntMatrix a = left.dims(r);
        const IntMatrix b = right.dims(r);
        if (a == b) continue;
        for (std::size_t i = 0; i < q.n; ++i) {
            for (std::size_t j = 0; j < q.n; ++j) {
                if (a(i, j) == b(i, j)) continue;
                rep.pass = false;
                rep.degree = r;
                rep.i = i;
                rep.j = j;
                std::ostringstream os;
                os << "dims differ at degree " << r << ", entry (" << i + 1 << "," << j + 1
                   << "): " << a(i, j) << " vs " << b(i, j);
                rep.message = os.str();
                return rep;
            }
        }
    }
    rep.message = "graded dimensions agree through degree " + std::to_string(max_degree);
    return rep;
}

}  // namespace ppa
