#include "csa/factor.hpp"

#include <algorithm>

#include "csa/error.hpp"
#include "csa/finite_field.hpp"
#include "csa/integer.hpp"
#include "csa/zpoly.hpp"

namespace csa {

using zpoly::ZPoly;

namespace {

void check_input(const RatPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "cannot factor a constant polynomial");
    if (!f.is_monic()) throw Error(ErrorKind::NonMonic, "factor_over_q expects a monic polynomial");
}

// Extended Euclid over F_p: s*g + t*h = 1 for coprime g, h.
std::pair<ff::FpPoly, ff::FpPoly> bezout(const ff::FpRing& R, const ff::FpPoly& g, const ff::FpPoly& h) {
    ff::FpPoly r0 = g, r1 = h, s0 = R.one(), s1, t0, t1 = R.one();
    while (!r1.empty()) {
        auto [q, r] = R.divrem(r0, r1);
        ff::FpPoly s2 = R.sub(s0, R.mul(q, s1));
        ff::FpPoly t2 = R.sub(t0, R.mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error(ErrorKind::Internal, "Hensel lifting needs coprime factors");
    auto inv = R.field().inv(r0[0]);
    return {R.scale(s0, inv), R.scale(t0, inv)};
}

ZPoly to_z(const ff::FpPoly& a) { return ZPoly(a.begin(), a.end()); }

// Lifts f = g*h (mod p), g and h monic and coprime, through `steps` quadratic
// Hensel steps to modulus p^(2^steps).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const ff::FpPoly& g0, const ff::FpPoly& h0, const Int& p,
                                    unsigned steps) {
    ff::FpRing R{ff::PrimeField(p)};
    auto [s0, t0] = bezout(R, g0, h0);
    ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
    Int m = p;
    using namespace zpoly;
    for (unsigned i = 0; i < steps; ++i) {
        Int m2 = m * m;
        ZPoly e = mod(sub(f, mul(g, h)), m2);
        auto [q, r] = divrem_monic_mod(mul(s, e), h, m2);
        ZPoly g1 = mod(add(g, add(mul(t, e), mul(q, g))), m2);
        ZPoly h1 = mod(add(h, r), m2);
        ZPoly b = mod(sub(add(mul(s, g1), mul(t, h1)), ZPoly{Int(1)}), m2);
        auto [c, d] = divrem_monic_mod(mul(s, b), h1, m2);
        s = mod(sub(s, d), m2);
        t = mod(sub(t, add(mul(t, b), mul(c, g1))), m2);
        g = std::move(g1);
        h = std::move(h1);
        m = m2;
    }
    return {g, h};
}

void hensel_multi(const ZPoly& f, const std::vector<ff::FpPoly>& factors, const Int& p, unsigned steps,
                  const Int& modulus, std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        out.push_back(zpoly::mod(f, modulus));
        return;
    }
    ff::FpRing R{ff::PrimeField(p)};
    const size_t half = factors.size() / 2;
    ff::FpPoly g0 = R.one(), h0 = R.one();
    for (size_t i = 0; i < half; ++i) g0 = R.mul(g0, factors[i]);
    for (size_t i = half; i < factors.size(); ++i) h0 = R.mul(h0, factors[i]);
    auto [g, h] = hensel_pair(f, g0, h0, p, steps);
    hensel_multi(g, {factors.begin(), factors.begin() + half}, p, steps, modulus, out);
    hensel_multi(h, {factors.begin() + half, factors.end()}, p, steps, modulus, out);
}

// Monic integer h divides monic integer G exactly.
bool divides_z(const ZPoly& h, const ZPoly& G, ZPoly* quotient) {
    if (h[0] != 0 && G[0] % h[0] != 0) return false;
    auto [q, r] = zpoly::divrem_monic(G, h);
    if (!r.empty()) return false;
    *quotient = std::move(q);
    return true;
}

// Irreducible monic factors of a squarefree monic integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly G) {
    const int n = zpoly::degree(G);
    if (n <= 1) return {G};

    Int p = 2;
    while (true) {
        ff::FpRing trial{ff::PrimeField(p)};
        if (trial.is_squarefree(ff::reduce(trial, G))) break;
        p = next_prime(p);
    }
    const ff::FpRing ring{ff::PrimeField(p)};
    std::vector<ff::FpPoly> modular;
    for (auto& [fac, mult] : ring.factor(ff::reduce(ring, G))) modular.push_back(fac);
    if (modular.size() == 1) return {G};

    // Any monic integer factor has coefficients below 2^n * ||G||_2.
    Int bound = zpoly::l2_norm_ceil(G);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    unsigned steps = 0;
    Int modulus = p;
    while (modulus <= 2 * bound) {
        modulus *= modulus;
        ++steps;
    }
    std::vector<ZPoly> lifted;
    hensel_multi(G, modular, p, steps, modulus, lifted);

    std::vector<ZPoly> found;
    size_t subset = 1;
    while (2 * subset <= lifted.size()) {
        const size_t r = lifted.size();
        std::vector<size_t> idx(subset);
        for (size_t i = 0; i < subset; ++i) idx[i] = i;
        bool hit = false;
        while (true) {
            ZPoly h{Int(1)};
            for (size_t i : idx) h = zpoly::mul_mod(h, lifted[i], modulus);
            h = zpoly::mod_symmetric(h, modulus);
            ZPoly q;
            if (divides_z(h, G, &q)) {
                found.push_back(h);
                G = std::move(q);
                for (size_t k = subset; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
                hit = true;
                break;
            }
            // next combination
            size_t k = subset;
            while (k > 0 && idx[k - 1] == r - subset + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t j = k; j < subset; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++subset;
    }
    if (zpoly::degree(G) > 0) found.push_back(G);
    return found;
}

}  // namespace

namespace ff {
FpPoly reduce(const FpRing& ring, const std::vector<Int>& coeffs) {
    FpPoly out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(ring.field().from_int(c));
    ring.trim(out);
    return out;
}
}  // namespace ff

RatPoly Factorization::expand() const {
    RatPoly out = RatPoly::constant(1);
    for (const auto& fp : factors) out *= fp.poly.pow(fp.multiplicity);
    return out;
}

Factorization factor_over_q(const RatPoly& f) {
    check_input(f);
    Factorization out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        auto [G, D] = zpoly::integral_monic(part);
        for (const auto& h : zassenhaus(G)) out.factors.push_back({zpoly::from_integral_monic(h, D), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.poly < b.poly; });
    return out;
}

bool is_irreducible(const RatPoly& f) {
    auto fac = factor_over_q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace csa
