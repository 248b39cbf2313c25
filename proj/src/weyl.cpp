#include "ppa/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppa/error.hpp"

namespace ppa {

Root simple_reflection(const CartanDatum& cd, std::size_t i, const Root& x) {
    const std::size_t n = cd.size();
    Int cx = 0;
    for (std::size_t j = 0; j < n; ++j) cx += cd.C(i, j) * x[j];
    Root y = x;
    y[i] -= cx;
    return y;
}

IntMatrix reflection_matrix(const CartanDatum& cd, std::size_t i) {
    const std::size_t n = cd.size();
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cd.C(i, j);
    return s;
}

namespace {

bool sign_coherent(const Root& x) {
    bool nonneg = true, nonpos = true;
    for (const Int& v : x) {
        if (v > 0) nonpos = false;
        if (v < 0) nonneg = false;
    }
    return nonneg || nonpos;
}

}  // namespace

RootSystem enumerate_roots(const CartanDatum& cd, std::optional<std::size_t> depth_limit) {
    if (cd.cls != Classification::Dynkin && !depth_limit)
        fail(Err::InfiniteRootSystem,
             "root system is infinite for " + std::string(classification_name(cd.cls)) +
                 " data; pass a depth limit");
    const std::size_t n = cd.size();
    std::set<Root> seen;
    std::vector<Root> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Root e(n, 0), f(n, 0);
        e[i] = 1;
        f[i] = -1;
        seen.insert(e);
        seen.insert(f);
        frontier.push_back(e);
        frontier.push_back(f);
    }
    RootSystem rs;
    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (depth_limit && depth == *depth_limit) {
            rs.complete = false;
            break;
        }
        ++depth;
        std::vector<Root> next;
        for (const Root& x : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                Root y = simple_reflection(cd, i, x);
                if (seen.insert(y).second) {
                    if (!sign_coherent(y))
                        fail(Err::IdentityViolation,
                             "root without positive/negative sign coherence found");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    rs.depth_used = depth;
    rs.roots.assign(seen.begin(), seen.end());
    return rs;
}

namespace {

std::vector<std::size_t> topological_order(const CartanDatum& cd) {
    const std::size_t n = cd.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cd.R(i, i) != 0) fail(Err::NotAcyclic, "orientation has a loop");
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && cd.R(i, j) != 0) ++indeg[j];
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.insert(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t v = *ready.begin();  // smallest-vertex tie break: deterministic
        ready.erase(ready.begin());
        order.push_back(v);
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && cd.R(v, u) != 0 && --indeg[u] == 0) ready.insert(u);
    }
    if (order.size() != n) fail(Err::NotAcyclic, "orientation has a directed cycle");
    return order;
}

}  // namespace

CoxeterData coxeter_element(const CartanDatum& cd, std::size_t order_cap) {
    if (cd.cls == Classification::BorcherdsWithLoops)
        fail(Err::NotAcyclic, "Coxeter element undefined in the presence of loops");
    const std::size_t n = cd.size();
    CoxeterData out;
    out.order = topological_order(cd);
    out.cminus = IntMatrix::identity(n);
    out.cox = IntMatrix::identity(n);
    for (std::size_t v : out.order) out.cminus = reflection_matrix(cd, v) * out.cminus;
    for (auto it = out.order.rbegin(); it != out.order.rend(); ++it)
        out.cox = reflection_matrix(cd, *it) * out.cox;
    if (out.cminus * out.cox != IntMatrix::identity(n))
        fail(Err::IdentityViolation, "internal: cminus * cox != identity");
    // the Euler-form adjunction that pins the sign conventions
    if (cd.E * out.cox != Int(-1) * cd.E.transposed())
        fail(Err::IdentityViolation, "Coxeter element does not satisfy E * cox = -E^T");
    IntMatrix p = out.cox;
    const IntMatrix id = IntMatrix::identity(n);
    std::size_t k = 1;
    while (p != id) {
        if (++k > order_cap)
            fail(Err::OrderNotFoundWithinCap,
                 "Coxeter element order exceeds cap " + std::to_string(order_cap));
        p = p * out.cox;
    }
    out.h = k;
    return out;
}

std::vector<std::vector<Root>> coxeter_orbits(const RootSystem& rs, const CoxeterData& cox) {
    std::set<Root> remaining(rs.roots.begin(), rs.roots.end());
    std::vector<std::vector<Root>> orbits;
    while (!remaining.empty()) {
        Root start = *remaining.begin();  // lexicographically smallest unvisited
        std::vector<Root> orbit;
        Root x = start;
        do {
            if (remaining.erase(x) == 0)
                fail(Err::IdentityViolation, "Coxeter orbit left the root system");
            orbit.push_back(x);
            x = cox.cox.apply(x);
        } while (x != start);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<Root> projective_classes(const CartanDatum& cd) {
    const std::size_t n = cd.size();
    IntMatrix nmat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_divexact(nmat(i, j).get_mpz_t(), cd.R(i, j).get_mpz_t(), cd.d[j].get_mpz_t());
    // N is nilpotent for acyclic orientations, so (I - N)^{-1} = sum N^t
    IntMatrix sum = IntMatrix::identity(n);
    IntMatrix pow = nmat;
    for (std::size_t t = 0; t < n && !pow.is_zero(); ++t) {
        sum = sum + pow;
        pow = pow * nmat;
    }
    if (!pow.is_zero()) fail(Err::NotAcyclic, "R D^{-1} is not nilpotent (orientation has cycles)");
    std::vector<Root> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sum.row(i));
    return out;
}

TauOrbits nakayama_permutation(const CartanDatum& cd, const CoxeterData& cox,
                               const RootSystem& rs) {
    const std::size_t n = cd.size();
    std::vector<Root> pcs = projective_classes(cd);
    std::map<Root, std::size_t> pindex;
    for (std::size_t i = 0; i < n; ++i) pindex[pcs[i]] = i;
    TauOrbits out;
    out.m.resize(n);
    out.rho.resize(n);
    out.walks.resize(n);
    std::map<Root, std::size_t> visited;  // walk vectors, with multiplicity
    for (std::size_t i = 0; i < n; ++i) {
        Root x = pcs[i];
        std::size_t t = 0;
        while (true) {
            bool nonpos = std::all_of(x.begin(), x.end(), [](const Int& v) { return v <= 0; });
            if (nonpos && t >= 1) break;
            out.walks[i].push_back(x);
            ++visited[x];
            x = cox.cminus.apply(x);
            if (++t > 10000)
                fail(Err::OrderNotFoundWithinCap, "tau-orbit walk did not reach a negative class");
        }
        out.m[i] = t;
        Root neg(n);
        for (std::size_t k = 0; k < n; ++k) neg[k] = -x[k];
        auto it = pindex.find(neg);
        if (it == pindex.end())
            fail(Err::IdentityViolation,
                 "cminus^m [P_i] is not the negative of a projective class");
        out.rho[i] = it->second;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (out.rho[out.rho[i]] != i)
            fail(Err::IdentityViolation, "Nakayama permutation is not an involution");
    std::size_t total = 0;
    for (std::size_t mi : out.m) total += mi;
    if (total * 2 != rs.size())
        fail(Err::IdentityViolation, "sum of m_i is not half the number of roots");
    // the walk slots must enumerate the positive roots exactly once
    for (const auto& [vec, count] : visited)
        if (count != 1)
            fail(Err::IdentityViolation, "tau-orbit walk repeats a positive root");
    for (const Root& r : rs.roots) {
        bool positive = std::all_of(r.begin(), r.end(), [](const Int& v) { return v >= 0; }) &&
                        std::any_of(r.begin(), r.end(), [](const Int& v) { return v > 0; });
        if (positive && visited.find(r) == visited.end())
            fail(Err::IdentityViolation, "tau-orbit walk misses a positive root");
    }
    if (visited.size() != rs.size() / 2)
        fail(Err::IdentityViolation, "tau-orbit walk size is not the positive root count");
    return out;
}

}  // namespace ppa
