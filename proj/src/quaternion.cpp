#include "csa/quaternion.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "csa/error.hpp"
#include "csa/factor.hpp"
#include "csa/poly_io.hpp"

namespace csa {

QuatAlgebra::QuatAlgebra(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 || b_ == 0) throw Error(ErrorKind::InvalidArgument, "quaternion parameters must be nonzero");
    division_ = !quaternion_to_csa(a_, b_, 1).invariants.empty();
}

QuatElt QuatAlgebra::add(const QuatElt& p, const QuatElt& q) const {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}
QuatElt QuatAlgebra::sub(const QuatElt& p, const QuatElt& q) const {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}
QuatElt QuatAlgebra::neg(const QuatElt& p) const { return {-p.w, -p.x, -p.y, -p.z}; }

QuatElt QuatAlgebra::mul(const QuatElt& p, const QuatElt& q) const {
    // jk = -b i, kj = b i, ki = -a j, ik = a j, k^2 = -ab
    return {p.w * q.w + a_ * p.x * q.x + b_ * p.y * q.y - a_ * b_ * p.z * q.z,
            p.w * q.x + p.x * q.w - b_ * p.y * q.z + b_ * p.z * q.y,
            p.w * q.y + p.y * q.w + a_ * p.x * q.z - a_ * p.z * q.x,
            p.w * q.z + p.z * q.w + p.x * q.y - p.y * q.x};
}

QuatElt QuatAlgebra::conj(const QuatElt& p) const { return {p.w, -p.x, -p.y, -p.z}; }

Rat QuatAlgebra::nrd(const QuatElt& p) const {
    return p.w * p.w - a_ * p.x * p.x - b_ * p.y * p.y + a_ * b_ * p.z * p.z;
}

QuatElt QuatAlgebra::inv(const QuatElt& p) const {
    Rat n = nrd(p);
    if (n == 0) throw Error(ErrorKind::NotInvertible, "quaternion with zero reduced norm");
    QuatElt c = conj(p);
    return {c.w / n, c.x / n, c.y / n, c.z / n};
}

QuatMat QuatMat::identity(long size) { return scalar(size, Rat(1)); }

QuatMat QuatMat::scalar(long size, const Rat& r) {
    QuatMat m(size);
    for (long i = 0; i < size; ++i) m.at(i, i).w = r;
    return m;
}

QuatMat mat_add(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y) {
    QuatMat out(x.n);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = alg.add(x.entries[i], y.entries[i]);
    return out;
}

QuatMat mat_sub(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y) {
    QuatMat out(x.n);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = alg.sub(x.entries[i], y.entries[i]);
    return out;
}

QuatMat mat_mul(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y) {
    if (x.n != y.n) throw Error(ErrorKind::ShapeMismatch, "matrix sizes differ");
    QuatMat out(x.n);
    for (long r = 0; r < x.n; ++r)
        for (long c = 0; c < x.n; ++c) {
            QuatElt acc = alg.zero();
            for (long k = 0; k < x.n; ++k) {
                if (x.at(r, k).is_zero() || y.at(k, c).is_zero()) continue;
                acc = alg.add(acc, alg.mul(x.at(r, k), y.at(k, c)));
            }
            out.at(r, c) = acc;
        }
    return out;
}

QuatMat mat_poly(const QuatAlgebra& alg, const QuatMat& m, const RatPoly& p) {
    // Horner; rational coefficients are central.
    QuatMat out(m.n);
    for (int i = p.degree(); i >= 0; --i) {
        out = mat_mul(alg, out, m);
        for (long k = 0; k < m.n; ++k) out.at(k, k).w += p.coeff(i);
    }
    return out;
}

QuatMat block_diagonal(const std::vector<QuatMat>& blocks) {
    long n = 0;
    for (const auto& b : blocks) n += b.n;
    QuatMat out(n);
    long off = 0;
    for (const auto& b : blocks) {
        for (long r = 0; r < b.n; ++r)
            for (long c = 0; c < b.n; ++c) out.at(off + r, off + c) = b.at(r, c);
        off += b.n;
    }
    return out;
}

namespace {

void require_division(const QuatAlgebra& alg) {
    if (!alg.is_division())
        throw Error(ErrorKind::SplitAlgebra, "(" + to_string(alg.a()) + ", " + to_string(alg.b()) +
                                                 ") is split; linear algebra here needs a division algebra");
}

// Elements u + v r of Q[r]/(r^2 - s); a field unless s is a square.
struct Quad {
    Rat u, v;
};

struct QuadRing {
    Rat s;
    Quad zero() const { return {0, 0}; }
    Quad one() const { return {1, 0}; }
    Quad add(const Quad& p, const Quad& q) const { return {p.u + q.u, p.v + q.v}; }
    Quad sub(const Quad& p, const Quad& q) const { return {p.u - q.u, p.v - q.v}; }
    Quad neg(const Quad& p) const { return {-p.u, -p.v}; }
    Quad mul(const Quad& p, const Quad& q) const { return {p.u * q.u + s * p.v * q.v, p.u * q.v + p.v * q.u}; }
};

// Berkowitz: division-free characteristic polynomial det(tI - A), returned
// with the leading coefficient first.
template <class Ring>
std::vector<typename Ring::Elem> berkowitz(const Ring& R, const std::vector<std::vector<typename Ring::Elem>>& a) {
    using E = typename Ring::Elem;
    const size_t n = a.size();
    std::vector<E> vect{R.one(), R.neg(a[0][0])};
    for (size_t r = 1; r < n; ++r) {
        std::vector<E> t(r + 2, R.zero());
        t[0] = R.one();
        t[1] = R.neg(a[r][r]);
        std::vector<E> x(r);
        for (size_t i = 0; i < r; ++i) x[i] = a[i][r];
        for (size_t k = 2; k <= r + 1; ++k) {
            E dot = R.zero();
            for (size_t i = 0; i < r; ++i) dot = R.add(dot, R.mul(a[r][i], x[i]));
            t[k] = R.neg(dot);
            if (k == r + 1) break;
            std::vector<E> y(r, R.zero());
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) y[i] = R.add(y[i], R.mul(a[i][j], x[j]));
            x = std::move(y);
        }
        std::vector<E> next(r + 2, R.zero());
        for (size_t i = 0; i < r + 2; ++i)
            for (size_t j = 0; j <= std::min(i, r); ++j) next[i] = R.add(next[i], R.mul(t[i - j], vect[j]));
        vect = std::move(next);
    }
    return vect;
}

struct QuadRingE : QuadRing {
    using Elem = Quad;
};

}  // namespace

RatPoly charpoly_quat(const QuatAlgebra& alg, const QuatMat& m) {
    if (m.n < 1) throw Error(ErrorKind::InvalidArgument, "empty matrix");
    // Choose s = r^2 with Q(r) quadratic when possible.
    Rat s = alg.a(), t = alg.b();
    bool swapped = false;
    if (is_rational_square(alg.a()) && !is_rational_square(alg.b())) {
        std::swap(s, t);
        swapped = true;
    }
    Rat root;
    const bool rational_root = is_rational_square(s, &root);
    QuadRingE R;
    R.s = s;
    const size_t N = static_cast<size_t>(2 * m.n);
    std::vector<std::vector<Quad>> a(N, std::vector<Quad>(N, Quad{0, 0}));
    for (long r = 0; r < m.n; ++r)
        for (long c = 0; c < m.n; ++c) {
            QuatElt q = m.at(r, c);
            if (swapped) q = {q.w, q.y, q.x, -q.z};  // i' = j, j' = i, k' = -k
            // w + x i + y j + z k -> [[w + x r, y + z r], [t (y - z r), w - x r]]
            a[2 * r][2 * c] = {q.w, q.x};
            a[2 * r][2 * c + 1] = {q.y, q.z};
            a[2 * r + 1][2 * c] = {t * q.y, -t * q.z};
            a[2 * r + 1][2 * c + 1] = {q.w, -q.x};
        }
    auto coeffs = berkowitz(R, a);
    std::vector<Rat> asc(N + 1);
    for (size_t k = 0; k <= N; ++k) {
        const Quad& c = coeffs[k];
        if (rational_root) {
            asc[N - k] = c.u + c.v * root;
        } else {
            if (c.v != 0)
                throw Error(ErrorKind::InternalNonRational, "characteristic polynomial has an irrational coefficient");
            asc[N - k] = c.u;
        }
    }
    return RatPoly(asc);
}

RatPoly minpoly_quat(const QuatAlgebra& alg, const QuatMat& m) {
    // Echelon basis of span(I, M, ..., M^(k-1)) with each row's expression in
    // powers of M tracked alongside.
    const size_t dim = static_cast<size_t>(4 * m.n * m.n);
    auto flatten = [&](const QuatMat& x) {
        std::vector<Rat> v;
        v.reserve(dim);
        for (const auto& e : x.entries) {
            v.push_back(e.w);
            v.push_back(e.x);
            v.push_back(e.y);
            v.push_back(e.z);
        }
        return v;
    };
    struct Row {
        std::vector<Rat> v;
        std::vector<Rat> expr;  // coefficients of M^0..M^k
        size_t pivot;
    };
    std::vector<Row> basis;
    QuatMat power = QuatMat::identity(m.n);
    for (size_t k = 0;; ++k) {
        Row row{flatten(power), std::vector<Rat>(k + 1, Rat(0)), 0};
        row.expr[k] = 1;
        for (const auto& b : basis) {
            if (row.v[b.pivot] == 0) continue;
            Rat f = row.v[b.pivot];
            for (size_t i = 0; i < dim; ++i) row.v[i] -= f * b.v[i];
            for (size_t i = 0; i < b.expr.size(); ++i) row.expr[i] -= f * b.expr[i];
        }
        size_t piv = 0;
        while (piv < dim && row.v[piv] == 0) ++piv;
        if (piv == dim) return RatPoly(row.expr);
        Rat f = row.v[piv];
        for (auto& c : row.v) c /= f;
        for (auto& c : row.expr) c /= f;
        row.pivot = piv;
        basis.push_back(std::move(row));
        power = mat_mul(alg, power, m);
    }
}

long rank_quat(const QuatAlgebra& alg, const QuatMat& m) {
    require_division(alg);
    QuatMat a = m;
    long rank = 0;
    std::vector<bool> used(static_cast<size_t>(a.n), false);
    for (long r = 0; r < a.n; ++r) {
        long piv = -1;
        for (long c = 0; c < a.n; ++c)
            if (!used[c] && !a.at(r, c).is_zero()) {
                piv = c;
                break;
            }
        if (piv < 0) continue;
        used[piv] = true;
        ++rank;
        const QuatElt pinv = alg.inv(a.at(r, piv));
        for (long c = 0; c < a.n; ++c) {
            if (c == piv || a.at(r, c).is_zero()) continue;
            // column c -= column piv * (pinv * a[r][c])
            const QuatElt q = alg.mul(pinv, a.at(r, c));
            for (long i = 0; i < a.n; ++i) a.at(i, c) = alg.sub(a.at(i, c), alg.mul(a.at(i, piv), q));
        }
    }
    return rank;
}

QuatMat mat_inverse(const QuatAlgebra& alg, const QuatMat& m) {
    require_division(alg);
    const long n = m.n;
    QuatMat a = m, inv = QuatMat::identity(n);
    for (long c = 0; c < n; ++c) {
        long piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) throw Error(ErrorKind::NotInvertible, "matrix is singular");
        if (piv != c)
            for (long k = 0; k < n; ++k) {
                std::swap(a.at(piv, k), a.at(c, k));
                std::swap(inv.at(piv, k), inv.at(c, k));
            }
        const QuatElt s = alg.inv(a.at(c, c));
        for (long k = 0; k < n; ++k) {
            a.at(c, k) = alg.mul(s, a.at(c, k));
            inv.at(c, k) = alg.mul(s, inv.at(c, k));
        }
        for (long r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            const QuatElt f = a.at(r, c);
            for (long k = 0; k < n; ++k) {
                a.at(r, k) = alg.sub(a.at(r, k), alg.mul(f, a.at(c, k)));
                inv.at(r, k) = alg.sub(inv.at(r, k), alg.mul(f, inv.at(c, k)));
            }
        }
    }
    return inv;
}

ElementInvariants invariants_of_element(const QuatAlgebra& alg, const QuatMat& m, bool allow_singular) {
    require_division(alg);
    ElementInvariants out;
    out.charpoly = charpoly_quat(alg, m);
    out.minpoly = minpoly_quat(alg, m);
    const CsaSpec spec = alg.spec(m.n);
    for (const auto& fp : factor_over_q(out.charpoly).factors) {
        const bool is_t = fp.poly == RatPoly::t();
        if (is_t && !allow_singular) throw Error(ErrorKind::NotInvertible, "element is singular (t divides its charpoly)");
        const auto cap = capacity_and_division_degree_over(spec, fp.poly);
        if (fp.poly.degree() % cap.capacity != 0)
            throw Error(ErrorKind::Internal, "deg p / c is not an integer for " + format_poly(fp.poly));
        const long unit = fp.poly.degree() / cap.capacity;
        const long expected = static_cast<long>(fp.multiplicity) / cap.division_degree;

        const QuatMat base = mat_poly(alg, m, fp.poly);
        QuatMat power = base;
        std::vector<long> kernels, counts;  // counts[k-1] = #{j : m_j >= k}
        long prev = 0;
        while (true) {
            const long ker = m.n - rank_quat(alg, power);
            if (ker % unit != 0)
                throw Error(ErrorKind::Internal, "kernel dimension is not a multiple of deg p / c");
            const long units = ker / unit;
            if (units == prev) break;
            kernels.push_back(ker);
            counts.push_back(units - prev);
            prev = units;
            power = mat_mul(alg, power, base);
        }
        if (prev != expected)
            throw Error(ErrorKind::Internal, "kernel staircase for " + format_poly(fp.poly) + " ends at " +
                                                 std::to_string(prev) + ", expected " + std::to_string(expected));
        Partition lam;
        for (long j = 1; j <= counts.front(); ++j) {
            long part = 0;
            for (long c : counts)
                if (c >= j) ++part;
            lam.push_back(part);
        }
        out.kernels.emplace(fp.poly, std::move(kernels));
        if (is_t)
            out.t_part = std::move(lam);
        else
            out.classes.emplace(fp.poly, std::move(lam));
    }
    return out;
}

bool conjugate_test(const QuatAlgebra& alg, const QuatMat& m1, const QuatMat& m2) {
    if (m1.n != m2.n) throw Error(ErrorKind::ShapeMismatch, "matrices have different sizes");
    require_division(alg);
    auto i1 = invariants_of_element(alg, m1), i2 = invariants_of_element(alg, m2);
    return i1.charpoly == i2.charpoly && i1.classes == i2.classes;
}

namespace {

// Rationals of height <= h ordered by height, then absolute value, then sign.
std::vector<Rat> rationals_up_to(long h) {
    std::vector<Rat> out;
    std::set<std::pair<long, long>> seen;
    for (long H = 0; H <= h; ++H) {
        std::vector<Rat> level;
        for (long q = 1; q <= std::max(H, 1L); ++q)
            for (long p = -H; p <= H; ++p) {
                Rat r(p, q);
                r.canonicalize();
                if (height(r) != Int(H)) continue;
                auto key = std::make_pair(r.get_num().get_si(), r.get_den().get_si());
                if (seen.insert(key).second) level.push_back(r);
            }
        std::sort(level.begin(), level.end(), [](const Rat& x, const Rat& y) {
            if (abs(x) != abs(y)) return abs(x) < abs(y);
            return x > y;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

bool within(const Rat& r, long h) { return height(r) <= Int(h); }

// A quaternion with reduced characteristic polynomial t^2 + g1 t + g0: w is
// forced to -g1/2; search (y, z) and solve a x^2 = w^2 - b y^2 + ab z^2 - g0.
std::optional<QuatElt> quaternion_with(const QuatAlgebra& alg, const RatPoly& g, const std::vector<Rat>& grid, long h) {
    const Rat w = -g.coeff(1) / 2;
    if (!within(w, h)) return std::nullopt;
    const Rat& a = alg.a();
    const Rat& b = alg.b();
    for (const auto& y : grid)
        for (const auto& z : grid) {
            Rat x2 = (w * w - b * y * y + a * b * z * z - g.coeff(0)) / a;
            Rat x;
            if (is_rational_square(x2, &x) && within(x, h)) return QuatElt{w, x, y, z};
        }
    return std::nullopt;
}

QuatMat companion(const RatPoly& h) {
    const long k = h.degree();
    QuatMat c(k);
    for (long i = 1; i < k; ++i) c.at(i, i - 1).w = 1;
    for (long i = 0; i < k; ++i) c.at(i, k - 1).w = -h.coeff(static_cast<int>(i));
    return c;
}

std::optional<QuatMat> structured_search(const QuatAlgebra& alg, const RatPoly& f, long h) {
    const auto grid = rationals_up_to(h);
    std::vector<RatPoly> pool;
    for (const auto& fp : factor_over_q(f).factors)
        for (unsigned k = 0; k < fp.multiplicity; ++k) pool.push_back(fp.poly);

    std::vector<QuatMat> blocks;
    std::function<bool(std::vector<RatPoly>)> place = [&](std::vector<RatPoly> rest) -> bool {
        if (rest.empty()) return true;
        const RatPoly p = rest.front();
        rest.erase(rest.begin());
        auto try_quadratic = [&](const RatPoly& g, std::vector<RatPoly> left) {
            auto q = quaternion_with(alg, g, grid, h);
            if (!q) return false;
            QuatMat one(1);
            one.at(0, 0) = *q;
            blocks.push_back(one);
            if (place(std::move(left))) return true;
            blocks.pop_back();
            return false;
        };
        if (p.degree() == 2 && try_quadratic(p, rest)) return true;
        if (p.degree() == 1) {
            for (size_t i = 0; i < rest.size(); ++i) {
                if (rest[i].degree() != 1 || (i > 0 && rest[i] == rest[i - 1])) continue;
                auto left = rest;
                left.erase(left.begin() + static_cast<long>(i));
                if (try_quadratic(p * rest[i], left)) return true;
            }
        }
        auto twin = std::find(rest.begin(), rest.end(), p);
        if (twin != rest.end()) {
            bool small = true;
            for (const auto& c : p.coeffs()) small = small && within(c, h);
            if (small) {
                auto left = rest;
                left.erase(left.begin() + (twin - rest.begin()));
                blocks.push_back(companion(p));
                if (place(std::move(left))) return true;
                blocks.pop_back();
            }
        }
        return false;
    };
    if (!place(pool)) return std::nullopt;
    return block_diagonal(blocks);
}

Rat random_coordinate(std::mt19937_64& rng, long h) {
    std::uniform_int_distribution<long> num(-h, h), den(1, h);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<QuatMat> search_realization(const QuatAlgebra& alg, long n, const RatPoly& f, long height, long trials,
                                          std::uint64_t seed) {
    if (n < 1 || height < 1) throw Error(ErrorKind::InvalidArgument, "n and height must be positive");
    if (f.is_zero() || !f.is_monic()) throw Error(ErrorKind::NonMonic, "target polynomial must be monic");
    if (f.degree() != 2 * n)
        throw Error(ErrorKind::DegreeMismatch, "target has degree " + std::to_string(f.degree()) + ", expected " +
                                                   std::to_string(2 * n));
    if (auto hit = structured_search(alg, f, height)) return hit;
    for (long trial = 0; trial < trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        std::mt19937_64 rng(seq);
        QuatMat m(n);
        for (auto& e : m.entries)
            e = {random_coordinate(rng, height), random_coordinate(rng, height), random_coordinate(rng, height),
                 random_coordinate(rng, height)};
        if (charpoly_quat(alg, m) == f) return m;
    }
    return std::nullopt;
}

}  // namespace csa
