#include "csa/zpoly.hpp"

#include <algorithm>

#include "csa/error.hpp"

namespace csa::zpoly {

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const Int& s) {
    ZPoly r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b) {
    if (b.empty() || b.back() != 1) throw Error(ErrorKind::NonMonic, "integer division needs a monic divisor");
    if (a.size() < b.size()) return {ZPoly{}, a};
    ZPoly r = a, q(a.size() - b.size() + 1);
    const size_t db = b.size() - 1;
    for (size_t i = a.size(); i-- > db;) {
        if (r[i] == 0) continue;
        Int c = r[i];
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

ZPoly mod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

ZPoly mod_symmetric(const ZPoly& a, const Int& m) {
    ZPoly r = mod(a, m);
    Int half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    trim(r);
    return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) { return mod(mul(a, b), m); }

std::pair<ZPoly, ZPoly> divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    auto [q, r] = divrem_monic(mod(a, m), b);
    return {mod(q, m), mod(r, m)};
}

std::pair<ZPoly, Int> integral_monic(const RatPoly& f) {
    if (!f.is_monic()) throw Error(ErrorKind::NonMonic, "expected a monic polynomial");
    Int D = 1;
    for (const auto& c : f.coeffs()) D = lcm(D, c.get_den());
    const int n = f.degree();
    ZPoly G(n + 1);
    Int Dpow = 1;  // D^(n-i), filled from the top
    for (int i = n; i >= 0; --i) {
        Rat c = f.coeff(i) * Dpow;
        if (c.get_den() != 1) throw Error(ErrorKind::Internal, "integral scaling failed");
        G[i] = c.get_num();
        Dpow *= D;
    }
    return {G, D};
}

RatPoly from_integral_monic(const ZPoly& h, const Int& D) {
    const int k = degree(h);
    std::vector<Rat> out(k + 1);
    Int Dpow = 1;  // D^(i-k) built as 1/D^(k-i)
    for (int i = k; i >= 0; --i) {
        out[i] = Rat(h[i], Dpow);
        out[i].canonicalize();
        Dpow *= D;
    }
    return RatPoly(std::move(out));
}

RatPoly to_rat(const ZPoly& a) {
    std::vector<Rat> v(a.begin(), a.end());
    return RatPoly(std::move(v));
}

Int l2_norm_ceil(const ZPoly& a) {
    Int s = 0;
    for (const auto& c : a) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

long content_valuation(const ZPoly& a, const Int& p) {
    long best = -1;
    for (const auto& c : a) {
        if (c == 0) continue;
        long v = valuation(c, p);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace csa::zpoly
