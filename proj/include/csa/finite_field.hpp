#pragma once

// Polynomial arithmetic and factorization over finite fields F_q, q = p^k.
// PolyRing is generic over the coefficient field so the same code serves the
// prime field (factoring mod p) and the residue extensions F_p[x]/(phi) that
// carry Newton-polygon residual polynomials.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "csa/error.hpp"
#include "csa/rational.hpp"

namespace csa::ff {

class PrimeField {
   public:
    using Elem = Int;

    explicit PrimeField(Int p) : p_(std::move(p)) {
        if (p_ < 2) throw Error(ErrorKind::InvalidArgument, "field characteristic must be prime");
    }

    const Int& characteristic() const noexcept { return p_; }
    Int order() const { return p_; }
    unsigned extension_degree() const noexcept { return 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& z) const {
        Int r;
        mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return reduce_once(Int(a + b)); }
    Elem sub(const Elem& a, const Elem& b) const {
        Int r = a - b;
        if (r < 0) r += p_;
        return r;
    }
    Elem neg(const Elem& a) const { return a == 0 ? Int(0) : Int(p_ - a); }
    Elem mul(const Elem& a, const Elem& b) const { return from_int(Int(a * b)); }
    Elem inv(const Elem& a) const {
        Int r;
        if (a == 0 || !mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()))
            throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_p");
        return r;
    }
    Elem pow(const Elem& a, const Int& e) const {
        Int r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Elem pth_root(const Elem& a) const { return a; }
    Elem random(gmp_randclass& rng) const { return rng.get_z_range(p_); }

   private:
    Elem reduce_once(Int r) const {
        if (r >= p_) r -= p_;
        return r;
    }
    Int p_;
};

template <class Field>
class PolyRing {
   public:
    using Elem = typename Field::Elem;
    using Poly = std::vector<Elem>;

    explicit PolyRing(Field field) : k_(std::move(field)), zero_(k_.zero()) {}
    const Field& field() const noexcept { return k_; }

    void trim(Poly& a) const {
        while (!a.empty() && k_.is_zero(a.back())) a.pop_back();
    }
    static int degree(const Poly& a) noexcept { return static_cast<int>(a.size()) - 1; }
    bool is_one(const Poly& a) const { return a.size() == 1 && a[0] == k_.one(); }
    Poly one() const { return Poly{k_.one()}; }
    Poly x() const { return Poly{k_.zero(), k_.one()}; }

    Poly add(const Poly& a, const Poly& b) const {
        Poly r(std::max(a.size(), b.size()), k_.zero());
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.size() && i < b.size())
                r[i] = k_.add(a[i], b[i]);
            else
                r[i] = i < a.size() ? a[i] : b[i];
        }
        trim(r);
        return r;
    }
    Poly sub(const Poly& a, const Poly& b) const {
        Poly r(std::max(a.size(), b.size()), k_.zero());
        for (size_t i = 0; i < r.size(); ++i) {
            const Elem& ai = i < a.size() ? a[i] : zero_;
            const Elem& bi = i < b.size() ? b[i] : zero_;
            r[i] = k_.sub(ai, bi);
        }
        trim(r);
        return r;
    }
    Poly mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, k_.zero());
        for (size_t i = 0; i < a.size(); ++i) {
            if (k_.is_zero(a[i])) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = k_.add(r[i + j], k_.mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }
    Poly scale(const Poly& a, const Elem& s) const {
        Poly r;
        r.reserve(a.size());
        for (const auto& c : a) r.push_back(k_.mul(c, s));
        trim(r);
        return r;
    }
    Poly monic(const Poly& a) const {
        if (a.empty()) throw Error(ErrorKind::ZeroPolynomial, "monic of zero polynomial over F_q");
        return scale(a, k_.inv(a.back()));
    }

    std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const {
        if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero over F_q");
        if (a.size() < b.size()) return {Poly{}, a};
        Poly r = a;
        Poly q(a.size() - b.size() + 1, k_.zero());
        const Elem inv = k_.inv(b.back());
        const size_t db = b.size() - 1;
        for (size_t i = a.size(); i-- > db;) {
            if (k_.is_zero(r[i])) continue;
            Elem c = k_.mul(r[i], inv);
            q[i - db] = c;
            for (size_t j = 0; j <= db; ++j) r[i - db + j] = k_.sub(r[i - db + j], k_.mul(c, b[j]));
        }
        r.resize(db);
        trim(r);
        trim(q);
        return {q, r};
    }
    Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
    Poly quo(const Poly& a, const Poly& b) const { return divrem(a, b).first; }

    Poly gcd(Poly a, Poly b) const {
        while (!b.empty()) {
            Poly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : monic(a);
    }

    Poly derivative(const Poly& a) const {
        Poly r;
        for (size_t i = 1; i < a.size(); ++i)
            r.push_back(k_.mul(k_.from_int(Int(static_cast<unsigned long>(i))), a[i]));
        trim(r);
        return r;
    }

    Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }

    Poly powmod(Poly base, Int e, const Poly& m) const {
        Poly result = rem(one(), m);
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m);
            e >>= 1;
            if (e > 0) base = mulmod(base, base, m);
        }
        return result;
    }

    bool is_squarefree(const Poly& f) const {
        if (degree(f) <= 0) return true;
        Poly d = derivative(f);
        if (d.empty()) return false;
        return degree(gcd(f, d)) == 0;
    }

    /// Squarefree factorization of a monic polynomial, pairwise coprime parts.
    std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& f) const {
        std::vector<std::pair<Poly, unsigned>> out;
        sff_into(monic(f), 1, out);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        return out;
    }

    /// Distinct-degree factorization of a squarefree monic polynomial:
    /// pairs (product of all irreducible factors of degree d, d).
    std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) const {
        std::vector<std::pair<Poly, unsigned>> out;
        const Int q = k_.order();
        Poly h = x();
        for (unsigned d = 1; 2 * static_cast<int>(d) <= degree(f); ++d) {
            h = powmod(h, q, f);
            Poly g = gcd(f, sub(h, x()));
            if (degree(g) > 0) {
                out.emplace_back(g, d);
                f = quo(f, g);
                h = rem(h, f);
            }
        }
        if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
        return out;
    }

    /// Cantor-Zassenhaus splitting of a monic squarefree f whose irreducible
    /// factors all have degree d.
    std::vector<Poly> equal_degree(const Poly& f, unsigned d, gmp_randclass& rng) const {
        std::vector<Poly> done, todo{f};
        while (!todo.empty()) {
            Poly g = std::move(todo.back());
            todo.pop_back();
            if (degree(g) == static_cast<int>(d)) {
                done.push_back(std::move(g));
                continue;
            }
            while (true) {
                Poly s = splitter(g, d, rng);
                Poly h = gcd(g, s);
                if (degree(h) > 0 && degree(h) < degree(g)) {
                    todo.push_back(quo(g, h));
                    todo.push_back(std::move(h));
                    break;
                }
            }
        }
        return done;
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients.
    std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, unsigned long seed = 0x5eed) const {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(seed);
        std::vector<std::pair<Poly, unsigned>> out;
        for (const auto& [part, mult] : squarefree_factorization(f)) {
            for (const auto& [group, d] : distinct_degree(part)) {
                for (auto& irr : equal_degree(group, d, rng)) out.emplace_back(std::move(irr), mult);
            }
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            return a.first < b.first;
        });
        return out;
    }

    bool is_irreducible(const Poly& f) const {
        if (degree(f) <= 0) return false;
        Poly g = monic(f);
        if (!is_squarefree(g)) return false;
        auto dd = distinct_degree(g);
        return dd.size() == 1 && static_cast<int>(dd[0].second) == degree(g);
    }

   private:
    void sff_into(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) const {
        if (degree(f) <= 0) return;
        Poly c = gcd(f, derivative(f));
        if (c.empty()) c = f;
        Poly w = quo(f, c);
        unsigned i = 1;
        while (degree(w) > 0) {
            Poly y = gcd(w, c);
            Poly fac = quo(w, y);
            if (degree(fac) > 0) out.emplace_back(fac, i * scale);
            w = y;
            c = quo(c, y);
            ++i;
        }
        if (degree(c) > 0) {
            const unsigned long p = k_.characteristic().get_ui();
            Poly root;
            for (size_t j = 0; j < c.size(); j += p) root.push_back(k_.pth_root(c[j]));
            trim(root);
            sff_into(monic(root), scale * static_cast<unsigned>(p), out);
        }
    }

    Poly random_poly(int below, gmp_randclass& rng) const {
        Poly a;
        for (int i = 0; i < below; ++i) a.push_back(k_.random(rng));
        trim(a);
        return a;
    }

    Poly splitter(const Poly& g, unsigned d, gmp_randclass& rng) const {
        Poly a = random_poly(degree(g), rng);
        const Int q = k_.order();
        if (k_.characteristic() != 2) {
            Int qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
            Int e = (qd - 1) / 2;
            return sub(powmod(a, e, g), one());
        }
        // Characteristic 2: absolute trace to F_2.
        unsigned steps = d * k_.extension_degree();
        Poly acc = rem(a, g), term = acc;
        for (unsigned i = 1; i < steps; ++i) {
            term = mulmod(term, term, g);
            acc = add(acc, term);
        }
        return acc;
    }

    Field k_;
    Elem zero_;
};

/// F_p[x]/(modulus) for a monic irreducible modulus over F_p.
class ExtensionField {
   public:
    using Elem = std::vector<Int>;

    ExtensionField(const PrimeField& base, std::vector<Int> modulus)
        : base_(base), ring_(base), modulus_(std::move(modulus)) {
        for (auto& c : modulus_) c = base_.from_int(c);
        ring_.trim(modulus_);
        if (PolyRing<PrimeField>::degree(modulus_) < 1)
            throw Error(ErrorKind::InvalidArgument, "extension modulus must have positive degree");
        modulus_ = ring_.monic(modulus_);
        mpz_pow_ui(order_.get_mpz_t(), base_.characteristic().get_mpz_t(), extension_degree());
    }

    const Int& characteristic() const noexcept { return base_.characteristic(); }
    const Int& order() const noexcept { return order_; }
    unsigned extension_degree() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
    const PrimeField& base() const noexcept { return base_; }
    const std::vector<Int>& modulus() const noexcept { return modulus_; }

    Elem zero() const { return {}; }
    Elem one() const { return {Int(1)}; }
    Elem from_int(const Int& z) const {
        Elem e{base_.from_int(z)};
        ring_.trim(e);
        return e;
    }
    Elem from_base_poly(Elem e) const {
        for (auto& c : e) c = base_.from_int(c);
        ring_.trim(e);
        return ring_.rem(e, modulus_);
    }
    bool is_zero(const Elem& a) const { return a.empty(); }
    Elem add(const Elem& a, const Elem& b) const { return ring_.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return ring_.sub(a, b); }
    Elem neg(const Elem& a) const { return ring_.sub({}, a); }
    Elem mul(const Elem& a, const Elem& b) const { return ring_.mulmod(a, b, modulus_); }
    Elem inv(const Elem& a) const {
        if (a.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
        // Extended Euclid over F_p.
        Elem r0 = modulus_, r1 = a, s0, s1 = ring_.one();
        while (!r1.empty()) {
            auto [q, r] = ring_.divrem(r0, r1);
            Elem s2 = ring_.sub(s0, ring_.mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant.
        return ring_.rem(ring_.scale(s0, base_.inv(r0[0])), modulus_);
    }
    Elem pow(const Elem& a, const Int& e) const { return ring_.powmod(a, e, modulus_); }
    Elem pth_root(const Elem& a) const {
        Int e;
        mpz_pow_ui(e.get_mpz_t(), characteristic().get_mpz_t(), extension_degree() - 1);
        return pow(a, e);
    }
    Elem random(gmp_randclass& rng) const {
        Elem e;
        for (unsigned i = 0; i < extension_degree(); ++i) e.push_back(base_.random(rng));
        ring_.trim(e);
        return e;
    }

   private:
    PrimeField base_;
    PolyRing<PrimeField> ring_;
    std::vector<Int> modulus_;
    Int order_;
};

using FpRing = PolyRing<PrimeField>;
using FpPoly = FpRing::Poly;

/// Reduces integer coefficients mod p and trims.
FpPoly reduce(const FpRing& ring, const std::vector<Int>& coeffs);

}  // namespace csa::ff
