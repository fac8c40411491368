#pragma once

// Test-only oracles. Each one is independent of the library path it checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "csa/poly.hpp"
#include "csa/quaternion.hpp"

namespace oracle {

using csa::Int;
using csa::Rat;
using csa::RatPoly;

// Integer polynomials modulo a small prime, as plain int64 vectors.
inline std::vector<int64_t> mod_small(const RatPoly& f, int64_t p) {
    std::vector<int64_t> out;
    for (const auto& c : f.coeffs()) {
        Int v = c.get_num() % p;
        long r = v.get_si();
        out.push_back(((r % p) + p) % p);
    }
    return out;
}

// a mod b over F_p for small p, b monic.
inline std::vector<int64_t> rem_small(std::vector<int64_t> a, const std::vector<int64_t>& b, int64_t p) {
    const size_t db = b.size() - 1;
    for (size_t i = a.size(); i-- > db;) {
        int64_t c = a[i] % p;
        if (c == 0) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(db);
    return a;
}

inline bool all_zero(const std::vector<int64_t>& v) {
    for (auto c : v)
        if (c != 0) return false;
    return true;
}

/// Brute force: a monic integer f is irreducible mod p if no monic polynomial
/// of degree 1..deg/2 over F_p divides it. Irreducible mod p (f monic) implies
/// irreducible over Q.
inline bool irreducible_mod_small_prime(const RatPoly& f, int64_t p) {
    auto fm = mod_small(f, p);
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<int64_t> g(d + 1, 0);
        g[d] = 1;
        int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (int64_t code = 0; code < total; ++code) {
            int64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (all_zero(rem_small(fm, g, p))) return false;
        }
    }
    return true;
}

/// Random monic integer polynomial of the given degree, irreducible over Q
/// certified by irreducibility modulo 3, 5 or 7.
inline RatPoly random_irreducible(std::mt19937_64& rng, int degree, long coeff_bound) {
    std::uniform_int_distribution<long> dist(-coeff_bound, coeff_bound);
    while (true) {
        std::vector<Rat> c(degree + 1);
        for (int i = 0; i < degree; ++i) c[i] = dist(rng);
        c[degree] = 1;
        RatPoly f(c);
        if (degree == 1) return f;
        for (int64_t p : {3, 5, 7})
            if (irreducible_mod_small_prime(f, p)) return f;
    }
}

/// Characteristic polynomial of a square rational matrix by Faddeev-LeVerrier.
inline RatPoly charpoly(const std::vector<std::vector<Rat>>& a) {
    const size_t n = a.size();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t k = 1; k <= n; ++k) {
        // m <- a*m + c[n-k+1]*I, then c[n-k] = -tr(a*m)/k
        std::vector<std::vector<Rat>> am(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t l = 0; l < n; ++l) am[i][j] += a[i][l] * m[l][j];
        for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m = am;
        Rat tr = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return RatPoly(c);
}

/// Characteristic polynomial over Q of h(theta) in Q[t]/(f), f monic.
inline RatPoly element_charpoly(const RatPoly& f, const RatPoly& h) {
    const int n = f.degree();
    // column j holds the coordinates of h(theta) * theta^j
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> cur(n, Rat(0));
    for (int i = 0; i <= h.degree() && i < n; ++i) cur[i] = h.coeff(i);
    for (int i = n; i <= h.degree(); ++i) throw std::logic_error("reduce h mod f first");
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = cur[i];
        // multiply by theta
        Rat top = cur[n - 1];
        for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1] - top * f.coeff(i);
        cur[0] = -top * f.coeff(0);
    }
    return charpoly(a);
}

/// The m-th cyclotomic polynomial by repeated exact division with int64.
inline RatPoly cyclotomic(int m) {
    std::vector<std::vector<int64_t>> phi(m + 1);
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        std::vector<int64_t> num(d + 1, 0);
        num[d] = 1;
        num[0] = -1;
        for (int e = 1; e < d; ++e) {
            if (d % e) continue;
            const auto& den = phi[e];  // monic
            const size_t dd = den.size() - 1;
            std::vector<int64_t> q(num.size() - dd, 0);
            for (size_t i = num.size() - 1;; --i) {
                const int64_t c = num[i];
                q[i - dd] = c;
                for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
                if (i == dd) break;
            }
            num = q;
        }
        phi[d] = num;
    }
    std::vector<Rat> c;
    for (auto v : phi[m]) c.emplace_back(static_cast<long>(v));
    return RatPoly(c);
}

/// (e, f, number of places) of a prime in Q(zeta_m).
struct CyclotomicSplit {
    int e, f, g;
};
inline CyclotomicSplit cyclotomic_split(int m, int p) {
    int pe = 1;
    while (m % p == 0) {
        m /= p;
        pe *= p;
    }
    const int e = pe == 1 ? 1 : pe / p * (p - 1);
    int f = 1;
    long x = p % m;
    while (m > 1 && x != 1) {
        x = x * p % m;
        ++f;
    }
    int totient = 0;
    for (int k = 1; k <= m; ++k) {
        int a = k, b = m;
        while (b) {
            int t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++totient;
    }
    return {e, f, totient / f};
}

// Rational canonical forms over a field with characteristic polynomial
// prod p_i^(g_i): chains of invariant factors d_1 | d_2 | ... | d_k with
// product f, each d_j given by its exponent vector. Counted by choosing the
// largest factor first.
inline long rcf_count(const std::vector<long>& g, const std::vector<long>& upper) {
    bool done = true;
    for (long x : g) done = done && x == 0;
    if (done) return 1;
    long total = 0;
    std::vector<long> d(g.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < d.size() && d[i] == std::min(g[i], upper[i])) d[i++] = 0;
        if (i == d.size()) break;
        ++d[i];
        std::vector<long> rest(g.size());
        for (size_t k = 0; k < g.size(); ++k) rest[k] = g[k] - d[k];
        total += rcf_count(rest, d);
    }
    return total;
}
inline long rcf_count(const std::vector<long>& g) { return rcf_count(g, g); }

// Exponent vector of a monic quadratic over Q: {2} for (t - r)^2, {1, 1} for
// distinct rational roots, {1} when irreducible. Decided by the discriminant.
inline std::vector<long> quadratic_shape(const RatPoly& f) {
    const Rat disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
    if (disc == 0) return {2};
    if (disc < 0) return {1};
    mpz_class num = disc.get_num(), den = disc.get_den();
    const bool square = mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
    return square ? std::vector<long>{1, 1} : std::vector<long>{1};
}

// Rank over Q by plain Gaussian elimination.
inline long rational_rank(std::vector<std::vector<Rat>> a) {
    long rank = 0;
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[static_cast<size_t>(rank)]);
        const auto& top = a[static_cast<size_t>(rank)];
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || a[r][c] == 0) continue;
            const Rat f = a[r][c] / top[c];
            for (size_t k = c; k < cols; ++k) a[r][k] -= f * top[k];
        }
        ++rank;
    }
    return rank;
}

// M acting on D^n by left multiplication, as a 4n x 4n rational matrix in the
// basis e_c * {1, i, j, k}. Its characteristic polynomial is the square of
// the reduced one and its rank is 4 * rank over D.
inline std::vector<std::vector<Rat>> left_regular(const csa::QuatAlgebra& alg, const csa::QuatMat& m) {
    const size_t N = static_cast<size_t>(4 * m.n);
    std::vector<std::vector<Rat>> out(N, std::vector<Rat>(N, Rat(0)));
    const csa::QuatElt basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (long c = 0; c < m.n; ++c)
        for (size_t b = 0; b < 4; ++b)
            for (long r = 0; r < m.n; ++r) {
                const auto q = alg.mul(m.at(r, c), basis[b]);
                const size_t col = static_cast<size_t>(4 * c) + b, row = static_cast<size_t>(4 * r);
                out[row][col] = q.w;
                out[row + 1][col] = q.x;
                out[row + 2][col] = q.y;
                out[row + 3][col] = q.z;
            }
    return out;
}

inline Rat random_rat(std::mt19937_64& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline csa::QuatMat random_quat_mat(std::mt19937_64& rng, long n, long height) {
    csa::QuatMat m(n);
    for (auto& e : m.entries)
        e = {random_rat(rng, height), random_rat(rng, height), random_rat(rng, height), random_rat(rng, height)};
    return m;
}

}  // namespace oracle
