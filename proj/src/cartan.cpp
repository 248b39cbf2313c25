#include "ppa/cartan.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>

#include "ppa/error.hpp"
#include "ppa/linalg.hpp"

namespace ppa {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Dynkin: return "Dynkin";
        case Classification::Affine: return "Affine";
        case Classification::Indefinite: return "Indefinite";
        case Classification::BorcherdsWithLoops: return "BorcherdsWithLoops";
    }
    return "?";
}

const char* err_name(Err e) {
    switch (e) {
        case Err::BadInput: return "BadInput";
        case Err::NonPositiveWeight: return "NonPositiveWeight";
        case Err::DivisibilityViolation: return "DivisibilityViolation";
        case Err::DisconnectedQuiver: return "DisconnectedQuiver";
        case Err::DuplicateLabel: return "DuplicateLabel";
        case Err::NotSymmetrizable: return "NotSymmetrizable";
        case Err::NonCartanEntries: return "NonCartanEntries";
        case Err::NotAcyclic: return "NotAcyclic";
        case Err::NotSimplyLaced: return "NotSimplyLaced";
        case Err::NonDynkinNeedsMaxDegree: return "NonDynkinNeedsMaxDegree";
        case Err::InfiniteRootSystem: return "InfiniteRootSystem";
        case Err::DegreeCapExceeded: return "DegreeCapExceeded";
        case Err::PathCountCapExceeded: return "PathCountCapExceeded";
        case Err::PrimeModeRefused: return "PrimeModeRefused";
        case Err::DynkinNotSupported: return "DynkinNotSupported";
        case Err::OrderNotFoundWithinCap: return "OrderNotFoundWithinCap";
        case Err::SocleMismatch: return "SocleMismatch";
        case Err::IdentityViolation: return "IdentityViolation";
        case Err::KernelFound: return "KernelFound";
    }
    return "?";
}

bool is_input_error(Err e) {
    switch (e) {
        case Err::SocleMismatch:
        case Err::IdentityViolation:
        case Err::KernelFound:
            return false;
        default:
            return true;
    }
}

namespace {

void check_connected(const std::vector<Int>& d, const IntMatrix& r) {
    const std::size_t n = d.size();
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        for (std::size_t u = 0; u < n; ++u) {
            if (seen[u] || (r(v, u) == 0 && r(u, v) == 0)) continue;
            seen[u] = 1;
            ++count;
            bfs.push(u);
        }
    }
    if (count != n) fail(Err::DisconnectedQuiver, "underlying valued graph is not connected");
}

}  // namespace

ValuedQuiver make_valued_quiver(std::vector<Int> d, const std::vector<ValuedArrow>& arrows) {
    const std::size_t n = d.size();
    if (n == 0) fail(Err::BadInput, "a quiver needs at least one vertex");
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] < 1)
            fail(Err::NonPositiveWeight, "vertex weight d_" + std::to_string(i + 1) + " must be >= 1");
    IntMatrix r(n, n);
    for (const ValuedArrow& a : arrows) {
        if (a.from < 0 || a.to < 0 || static_cast<std::size_t>(a.from) >= n ||
            static_cast<std::size_t>(a.to) >= n)
            fail(Err::BadInput, "arrow endpoint out of range");
        if (a.weight < 1) fail(Err::NonPositiveWeight, "arrow weight must be >= 1");
        r(static_cast<std::size_t>(a.from), static_cast<std::size_t>(a.to)) += a.weight;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Int& w = r(i, j);
            if (w == 0) continue;
            if (!mpz_divisible_p(w.get_mpz_t(), d[i].get_mpz_t()) ||
                !mpz_divisible_p(w.get_mpz_t(), d[j].get_mpz_t()))
                fail(Err::DivisibilityViolation,
                     "arrow weight r(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + w.get_str() + " is not divisible by both endpoint weights");
        }
    check_connected(d, r);
    return ValuedQuiver{std::move(d), std::move(r)};
}

ValuedQuiver reverse_arrows(const ValuedQuiver& q, const std::vector<std::pair<int, int>>& pairs) {
    IntMatrix r = q.R;
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= q.size() ||
            static_cast<std::size_t>(j) >= q.size() || r(i, j) == 0)
            fail(Err::BadInput, "no arrow to reverse at the given position");
        if (i == j) continue;  // a reversed loop is the same loop
        r(j, i) += r(i, j);
        r(i, j) = 0;
    }
    return ValuedQuiver{q.d, std::move(r)};
}

ValuedQuiver reverse_all_arrows(const ValuedQuiver& q) {
    return ValuedQuiver{q.d, q.R.transposed()};
}

CartanDatum build_cartan(const ValuedQuiver& q) {
    const std::size_t n = q.size();
    CartanDatum cd;
    cd.d = q.d;
    cd.D = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) cd.D(i, i) = q.d[i];
    cd.R = q.R;
    cd.B = cd.R + cd.R.transposed();
    cd.Bbar = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // integral because d_i | r_ij and d_i | r_ji
            mpz_divexact(cd.Bbar(i, j).get_mpz_t(), cd.B(i, j).get_mpz_t(), q.d[i].get_mpz_t());
        }
    cd.C = IntMatrix::identity(n);
    cd.C = (Int(2) * cd.C) - cd.Bbar;
    cd.E = cd.D - cd.R;
    if ((cd.D * cd.C) != (cd.D * cd.C).transposed())
        fail(Err::NotSymmetrizable, "internal: D*C not symmetric");
    if (cd.E + cd.E.transposed() != Int(2) * cd.D - cd.B)
        fail(Err::IdentityViolation, "internal: E + E^T != 2D - B");
    cd.cls = classify(cd);
    if (cd.cls == Classification::Dynkin) cd.dynkin = dynkin_type(cd);
    return cd;
}

Classification classify(const CartanDatum& cd) {
    const std::size_t n = cd.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cd.Bbar(i, i) > 0) return Classification::BorcherdsWithLoops;
    std::vector<Int> minors = leading_principal_minors(cd.D * cd.C);
    bool proper_positive = true;
    for (std::size_t k = 0; k + 1 < n; ++k) proper_positive = proper_positive && minors[k] > 0;
    if (proper_positive && minors[n - 1] > 0) return Classification::Dynkin;
    // connected + leading proper minors positive + singular <=> positive
    // semidefinite with one-dimensional radical
    if (proper_positive && minors[n - 1] == 0) return Classification::Affine;
    return Classification::Indefinite;
}

DynkinName dynkin_type(const CartanDatum& cd) {
    const std::size_t n = cd.size();
    if (n == 1) return {'A', 1};
    struct Edge {
        std::size_t a, b;
        Int wa, wb;  // Bbar(a,b), Bbar(b,a)
    };
    std::vector<Edge> edges;
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cd.Bbar(i, j) != 0) {
                edges.push_back({i, j, cd.Bbar(i, j), cd.Bbar(j, i)});
                ++degree[i];
                ++degree[j];
            }
    if (edges.size() != n - 1)
        fail(Err::IdentityViolation, "internal: positive definite datum is not a tree");
    Int maxprod = 0;
    const Edge* valued = nullptr;
    std::size_t valued_count = 0;
    for (const Edge& e : edges) {
        Int prod = e.wa * e.wb;
        if (prod > maxprod) maxprod = prod;
        if (prod > 1) {
            valued = &e;
            ++valued_count;
        }
    }
    if (maxprod == 3) return {'G', 2};
    if (maxprod == 2) {
        if (valued_count != 1 || *std::max_element(degree.begin(), degree.end()) > 2)
            fail(Err::IdentityViolation, "internal: unexpected positive definite shape");
        if (n == 2) return {'B', 2};
        bool a_leaf = degree[valued->a] == 1;
        bool b_leaf = degree[valued->b] == 1;
        if (!a_leaf && !b_leaf) return {'F', 4};
        std::size_t leaf = a_leaf ? valued->a : valued->b;
        std::size_t nbr = a_leaf ? valued->b : valued->a;
        // short valued leaf (d smaller) is the B series
        return cd.d[leaf] < cd.d[nbr] ? DynkinName{'B', static_cast<int>(n)}
                                      : DynkinName{'C', static_cast<int>(n)};
    }
    // simply laced: path or a single trivalent fork
    std::size_t fork = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] > 3) fail(Err::IdentityViolation, "internal: vertex of degree > 3");
        if (degree[v] == 3) {
            if (fork != n) fail(Err::IdentityViolation, "internal: two fork vertices");
            fork = v;
        }
    }
    if (fork == n) return {'A', static_cast<int>(n)};
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[fork]) {
        std::size_t len = 1, prev = fork, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', static_cast<int>(n)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {'E', static_cast<int>(n)};
    fail(Err::IdentityViolation, "internal: unexpected simply laced shape");
}

CartanDatum from_cartan_matrix(const IntMatrix& c, std::optional<std::vector<Int>> symmetrizer) {
    const std::size_t n = c.rows();
    if (n == 0 || c.cols() != n) fail(Err::NonCartanEntries, "Cartan matrix must be square and non-empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (c(i, i) > 2 || mpz_odd_p(c(i, i).get_mpz_t()))
            fail(Err::NonCartanEntries,
                 "diagonal entry C(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") = " +
                     c(i, i).get_str() + " must be an even integer <= 2 to come from a valued quiver");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c(i, j) > 0)
                fail(Err::NonCartanEntries, "off-diagonal entry C(" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") must be <= 0");
            if ((c(i, j) == 0) != (c(j, i) == 0))
                fail(Err::NotSymmetrizable, "zero pattern of C is not symmetric at (" +
                                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    std::vector<Int> d;
    if (symmetrizer) {
        d = *symmetrizer;
        if (d.size() != n) fail(Err::NotSymmetrizable, "symmetrizer length mismatch");
        for (const Int& v : d)
            if (v < 1) fail(Err::NotSymmetrizable, "symmetrizer entries must be positive");
    } else {
        // propagate d_j = d_i * c_ij / c_ji along a spanning tree, then clear
        // denominators and divide by the gcd: minimal positive symmetrizer
        std::vector<Rat> dr(n);
        std::vector<char> seen(n, 0);
        dr[0] = 1;
        seen[0] = 1;
        std::queue<std::size_t> bfs;
        bfs.push(0);
        while (!bfs.empty()) {
            std::size_t i = bfs.front();
            bfs.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (seen[j] || i == j || c(i, j) == 0) continue;
                dr[j] = dr[i] * Rat(c(i, j)) / Rat(c(j, i));
                dr[j].canonicalize();
                seen[j] = 1;
                bfs.push(j);
            }
        }
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n))
            fail(Err::DisconnectedQuiver, "Cartan matrix has a disconnected valued graph");
        Int l = 1;
        for (const Rat& v : dr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        d.resize(n);
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = dr[i].get_num() * (l / dr[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_mpz_t());
        }
        for (std::size_t i = 0; i < n; ++i) d[i] /= g;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d[i] * c(i, j) != d[j] * c(j, i))
                fail(Err::NotSymmetrizable, "no positive symmetrizer makes D*C symmetric");
    IntMatrix b(n, n);
    std::vector<ValuedArrow> arrows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = d[i] * (Int(2) * Int(i == j ? 1 : 0) - c(i, j));
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i) != 0)
            arrows.push_back({static_cast<int>(i), static_cast<int>(i), b(i, i) / 2});
        for (std::size_t j = i + 1; j < n; ++j)
            if (b(i, j) != 0) arrows.push_back({static_cast<int>(i), static_cast<int>(j), b(i, j)});
    }
    return build_cartan(make_valued_quiver(std::move(d), arrows));
}

IntMatrix standard_cartan(char series, int rank) {
    const std::size_t n = static_cast<std::size_t>(rank);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto path = [&](std::size_t k) {
        for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    };
    switch (series) {
        case 'A':
            if (rank < 1) fail(Err::BadInput, "A needs rank >= 1");
            path(n);
            break;
        case 'B':
        case 'C':
            if (rank < 2) fail(Err::BadInput, "B/C need rank >= 2");
            path(n);
            break;
        case 'D':
            if (rank < 4) fail(Err::BadInput, "D needs rank >= 4");
            path(n - 1);
            edges.push_back({n - 3, n - 1});
            break;
        case 'E':
            if (rank < 6 || rank > 8) fail(Err::BadInput, "E needs rank 6..8");
            edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            if (rank >= 7) edges.push_back({5, 6});
            if (rank == 8) edges.push_back({6, 7});
            break;
        case 'F':
            if (rank != 4) fail(Err::BadInput, "F needs rank 4");
            path(4);
            break;
        case 'G':
            if (rank != 2) fail(Err::BadInput, "G needs rank 2");
            path(2);
            break;
        default:
            fail(Err::BadInput, std::string("unknown series ") + series);
    }
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
    for (auto [a, b] : edges) {
        c(a, b) = -1;
        c(b, a) = -1;
    }
    if (series == 'B') c(n - 1, n - 2) = -2;
    if (series == 'C') c(n - 2, n - 1) = -2;
    if (series == 'F') c(2, 1) = -2;
    if (series == 'G') c(1, 0) = -3;
    return c;
}

}  // namespace ppa
