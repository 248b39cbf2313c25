#include "ppa/linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "ppa/error.hpp"

namespace ppa {

Int bareiss_det(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n != a.cols()) fail(Err::BadInput, "determinant of a non-square matrix");
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // two-term update keeps every division exact
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::vector<Int> leading_principal_minors(const IntMatrix& a) {
    std::vector<Int> out;
    out.reserve(a.rows());
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        IntMatrix blk(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) blk(i, j) = a(i, j);
        out.push_back(bareiss_det(std::move(blk)));
    }
    return out;
}

namespace {

void normalize_row(IntVec& row, std::size_t from) {
    Int g = 0;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t exact_rank(std::vector<IntVec> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& v) { return v == 0; });
                              }),
               rows.end());
    if (rows.empty()) return 0;
    const std::size_t w = rows[0].size();
    std::size_t rank = 0;
    Int t;
    for (std::size_t col = 0; col < w && rank < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            if (piv == rows.size() || mpz_cmpabs(rows[r][col].get_mpz_t(), rows[piv][col].get_mpz_t()) < 0)
                piv = r;
        }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const IntVec& pr = rows[rank];
        const Int& pv = pr[col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            IntVec& cur = rows[r];
            if (cur[col] == 0) continue;
            Int f = cur[col];
            for (std::size_t j = col; j < w; ++j) {
                mpz_mul(t.get_mpz_t(), f.get_mpz_t(), pr[j].get_mpz_t());
                mpz_mul(cur[j].get_mpz_t(), cur[j].get_mpz_t(), pv.get_mpz_t());
                mpz_sub(cur[j].get_mpz_t(), cur[j].get_mpz_t(), t.get_mpz_t());
            }
            normalize_row(cur, col + 1);
        }
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin bases for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::size_t rank_mod_p(const std::vector<IntVec>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t w = rows[0].size();
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) {
        std::vector<std::uint64_t> mr(w);
        bool nonzero = false;
        for (std::size_t j = 0; j < w; ++j) {
            mr[j] = mpz_fdiv_ui(r[j].get_mpz_t(), p);
            nonzero = nonzero || mr[j] != 0;
        }
        if (nonzero) m.push_back(std::move(mr));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w && rank < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        std::uint64_t inv = powmod(m[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            std::uint64_t f = mulmod(m[r][col], inv, p);
            for (std::size_t j = col; j < w; ++j) {
                std::uint64_t sub = mulmod(f, m[rank][j], p);
                m[r][j] = (m[r][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t span_rank(const std::vector<IntVec>& rows, std::size_t width, const FieldMode& field) {
    if (field.exact()) return exact_rank(rows);
    if (!is_probable_prime(field.prime))
        fail(Err::BadInput, "field modulus " + std::to_string(field.prime) + " is not prime");
    if (field.prime <= width)
        fail(Err::BadInput, "prime " + std::to_string(field.prime) +
                                " is not larger than the block path count " + std::to_string(width));
    return rank_mod_p(rows, field.prime);
}

std::vector<std::vector<Rat>> row_dependencies(const std::vector<IntVec>& rows) {
    const std::size_t m = rows.size();
    if (m == 0) return {};
    const std::size_t w = rows[0].size();
    // eliminate [A | I]; rows whose A-part vanishes carry a dependency in the I-part
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(w + m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < w; ++j) a[i][j] = Rat(rows[i][j]);
        a[i][w + i] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w && rank < m; ++col) {
        std::size_t piv = m;
        for (std::size_t r = rank; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv == m) continue;
        std::swap(a[rank], a[piv]);
        Rat inv = 1 / a[rank][col];
        for (std::size_t r = rank + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (std::size_t j = col; j < w + m; ++j) {
                a[r][j] -= f * a[rank][j];
                a[r][j].canonicalize();
            }
        }
        ++rank;
    }
    std::vector<std::vector<Rat>> deps;
    for (std::size_t r = rank; r < m; ++r)
        deps.emplace_back(a[r].begin() + static_cast<long>(w), a[r].end());
    return deps;
}

}  // namespace ppa
