#include "csa/local_split.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "csa/error.hpp"
#include "csa/factor.hpp"
#include "csa/finite_field.hpp"
#include "csa/tower_field.hpp"
#include "csa/zpoly.hpp"

namespace csa {

using zpoly::ZPoly;

std::vector<int> SplittingType::local_degrees() const {
    std::vector<int> out;
    if (place.is_infinite()) {
        out.insert(out.end(), static_cast<size_t>(real), 1);
        out.insert(out.end(), static_cast<size_t>(complex), 2);
    } else {
        for (const auto& lf : factors) out.push_back(lf.degree());
    }
    return out;
}

namespace {

void require_irreducible(const RatPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "splitting needs deg p >= 1");
    if (!p.is_monic()) throw Error(ErrorKind::NonMonic, "splitting needs a monic polynomial");
    if (p.degree() <= 8 && !is_irreducible(p))
        throw Error(ErrorKind::NotIrreducible, "polynomial is not irreducible over Q");
}

ZPoly integral(const RatPoly& p) { return zpoly::integral_monic(p).first; }



// The phi-adic expansion f = sum a_j phi^j, deg a_j < deg phi.
std::vector<ZPoly> phi_expansion(ZPoly f, const ZPoly& phi) {
    std::vector<ZPoly> out;
    while (!f.empty()) {
        auto [q, r] = zpoly::divrem_monic(f, phi);
        out.push_back(std::move(r));
        f = std::move(q);
    }
    return out;
}

struct Vertex {
    long x;
    Rat y;
};

// Lower convex hull of the points (x, y), x increasing.
std::vector<Vertex> lower_hull(const std::vector<Vertex>& pts) {
    std::vector<Vertex> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b when it lies on or above segment a-p
            Rat cross = Rat(b.x - a.x) * (p.y - a.y) - (b.y - a.y) * Rat(p.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

using Tower = std::shared_ptr<const ff::TowerField>;
using Elem = ff::TowerField::Elem;
using Exps = std::vector<long>;

// One stage of a type: phi_i and, once the stage is closed, the slope mu_i =
// v(phi_i(theta)) shared by the roots of the branch, its ramification e_i and
// the exponents of the unit U_i = phi_i^e_i / M(e_i mu_i).
struct Stage {
    ZPoly phi;
    Rat mu;
    long e = 1;
    Exps unit;
};

// A type of order r: stages 1..r (index 0 unused) and the residue field tower
// K_0 = F_p, K_1 = F_p[x]/(phi_1 mod p), K_{i+1} = K_i[y]/(psi_i). The residue
// of U_i on the branch is the generator of K_{i+1}.
//
// Values of the branch live in the group G_i generated by 1 and mu_1..mu_i.
// Every w in G_i has a canonical monomial M(w) = p^a0 phi_1^a1 ... phi_i^ai
// with 0 <= aj < e_j; polynomials b of degree < deg phi_{i+1} satisfy
// b(theta) = M(w_i(b)) * (res_i(b) + small) with res_i(b) in K_{i+1} nonzero.
struct Type {
    Tower tower;
    std::vector<Stage> st;

    int order() const { return static_cast<int>(st.size()) - 1; }
    long ramification(int i) const {
        long E = 1;
        for (int j = 1; j <= i; ++j) E *= st[j].e;
        return E;
    }
};

long to_long(const Rat& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw Error(ErrorKind::Internal, "non-integral exponent in a monomial");
    return r.get_num().get_si();
}

class TypeSplitter {
   public:
    TypeSplitter(ZPoly f, Int prime) : f_(std::move(f)), p_(std::move(prime)), ring_(ff::PrimeField(p_)) {
        rng_.seed(0x5eed);
    }

    std::vector<LocalFactor> run() {
        std::vector<LocalFactor> out;
        auto fbar = ff::reduce(ring_, f_);
        auto base = ff::TowerField::prime(p_);
        for (const auto& [phibar, k] : ring_.factor(fbar)) {
            Type t;
            ZPoly phi(phibar.begin(), phibar.end());
            std::vector<Elem> mod;
            for (const auto& c : phibar) mod.push_back({c});
            t.tower = base->extend(mod);
            t.st.resize(2);
            t.st[1].phi = std::move(phi);
            analyze(t, Rat(0), static_cast<long>(k), 0, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    static constexpr int kMaxDepth = 256;

    [[noreturn]] void unsupported(const std::string& why) const {
        throw Error(ErrorKind::UnsupportedLocalComputation,
                    "prime " + p_.get_str() + ": " + why + "; supply a splitting override");
    }

    // Canonical exponents of M(w), w in G_i.
    Exps canon(const Type& t, Rat w, int i) const {
        Exps a(static_cast<size_t>(i) + 1, 0);
        for (int j = i; j >= 1; --j) {
            const long Eprev = t.ramification(j - 1);
            long alpha = 0;
            for (; alpha < t.st[j].e; ++alpha) {
                Rat x = (w - alpha * t.st[j].mu) * Eprev;
                if (x.get_den() == 1) break;
            }
            if (alpha == t.st[j].e) throw Error(ErrorKind::Internal, "value outside the value group");
            a[j] = alpha;
            w -= alpha * t.st[j].mu;
        }
        a[0] = to_long(w);
        return a;
    }

    // Residue in K_{i+1} of the value-zero monomial with exponents a.
    Elem monomial_residue(const Type& t, Exps a, int i) const {
        const auto K = t.tower->field(i + 1);
        Elem out = K.one();
        for (int j = i; j >= 1; --j) {
            const auto& s = t.st[j];
            if (a[j] % s.e != 0) throw Error(ErrorKind::Internal, "monomial does not have value zero");
            const long k = a[j] / s.e;
            if (k == 0) continue;
            for (int m = 0; m <= j; ++m) a[m] -= k * s.unit[m];
            out = K.mul(out, K.pow(t.tower->embed(t.tower->generator(j + 1), i + 1), k));
        }
        if (a[0] != 0) throw Error(ErrorKind::Internal, "monomial does not have value zero");
        return out;
    }

    // (w_i(b), res_i(b)) for nonzero b with deg b < deg phi_{i+1}.
    std::pair<Rat, Elem> value(const Type& t, const ZPoly& b, int i) const {
        if (i == 0) {
            const long w = zpoly::content_valuation(b, p_);
            Int scale;
            mpz_pow_ui(scale.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(w));
            const auto K = t.tower->field(1);
            Elem res = K.zero();
            for (size_t j = 0; j < b.size(); ++j) {
                Int c = b[j] / scale;
                res.at(j) = t.tower->base().from_int(c);
            }
            return {Rat(w), res};
        }
        const auto& s = t.st[i];
        auto parts = phi_expansion(b, s.phi);
        std::vector<std::pair<Rat, Elem>> vals(parts.size());
        std::optional<Rat> w;
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].empty()) continue;
            vals[k] = value(t, parts[k], i - 1);
            Rat here = vals[k].first + static_cast<long>(k) * s.mu;
            if (!w || here < *w) w = here;
        }
        const auto K = t.tower->field(i + 1);
        const Exps target = canon(t, *w, i);
        Elem res = K.zero();
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].empty() || vals[k].first + static_cast<long>(k) * s.mu != *w) continue;
            Exps a = canon(t, vals[k].first, i - 1);
            a.push_back(static_cast<long>(k));
            for (int m = 0; m <= i; ++m) a[m] -= target[m];
            res = K.add(res, K.mul(t.tower->embed(vals[k].second, i + 1), monomial_residue(t, a, i)));
        }
        return {*w, res};
    }

    // A polynomial b with deg b < deg phi_{i+1}, w_i(b) = w and res_i(b) =
    // gamma. Integral whenever w exceeds the threshold of stage i.
    ZPoly lift(const Type& t, const Rat& w, const Elem& gamma, int i) const {
        if (t.tower->field(i + 1).is_zero(gamma)) return {};
        if (i == 0) {
            const long v = to_long(w);
            if (v < 0) throw Error(ErrorKind::Internal, "lift needs a negative power of p");
            Int scale;
            mpz_pow_ui(scale.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(v));
            ZPoly out(gamma.begin(), gamma.end());
            for (auto& c : out) c *= scale;
            zpoly::trim(out);
            return out;
        }
        const auto& s = t.st[i];
        const Exps target = canon(t, w, i);
        const auto parts = t.tower->blocks(gamma, i + 1);
        const auto K = t.tower->field(i);
        ZPoly out;
        for (size_t j = 0; j < parts.size(); ++j) {
            if (K.is_zero(parts[j])) continue;
            const long k = target[i] + static_cast<long>(j) * s.e;
            const Rat wk = w - k * s.mu;
            Exps a = canon(t, wk, i - 1);
            a.push_back(k);
            for (int m = 0; m <= i; ++m) a[m] -= target[m] + static_cast<long>(j) * s.unit[m];
            a.pop_back();
            Elem coeff = K.mul(parts[j], K.inv(monomial_residue(t, a, i - 1)));
            ZPoly term = lift(t, wk, coeff, i - 1);
            for (long e = 0; e < k; ++e) term = zpoly::mul(term, s.phi);
            out = zpoly::add(out, term);
        }
        return out;
    }

    // phi_{r+1}: one-sided of slope mu_r and residual polynomial a multiple
    // of psi, the modulus of K_{r+1}.
    ZPoly next_phi(const Type& t, const std::vector<Elem>& psi) const {
        const int r = t.order();
        const auto& s = t.st[r];
        const long f = static_cast<long>(psi.size()) - 1;
        const auto K = t.tower->field(r);
        const Exps step = canon(t, s.e * s.mu, r - 1);
        const Exps base = canon(t, f * s.e * s.mu, r - 1);
        auto kappa = [&](long i) {
            Exps a = canon(t, (f - i) * s.e * s.mu, r - 1);
            for (int m = 0; m < r; ++m) a[m] += i * step[m] - base[m];
            return monomial_residue(t, a, r - 1);
        };
        const Elem top = kappa(f);
        ZPoly phi_e{Int(1)};
        for (long k = 0; k < s.e; ++k) phi_e = zpoly::mul(phi_e, s.phi);
        ZPoly out, power{Int(1)};
        for (long i = 0; i <= f; ++i) {
            if (i == f) {
                out = zpoly::add(out, power);
                break;
            }
            if (!K.is_zero(psi[i])) {
                Elem gamma = K.mul(K.mul(top, psi[i]), K.inv(kappa(i)));
                out = zpoly::add(out, zpoly::mul(lift(t, (f - i) * s.e * s.mu, gamma, r - 1), power));
            }
            power = zpoly::mul(power, phi_e);
        }
        return out;
    }

    // Places of the branch of t whose roots satisfy v(phi_r(theta)) >
    // threshold; the matching sides have total length `length`.
    void analyze(const Type& t, const Rat& threshold, long length, int depth, std::vector<LocalFactor>& out) {
        if (depth > kMaxDepth) unsupported("the Newton polygon recursion did not terminate");
        const int r = t.order();
        const ZPoly& phi = t.st[r].phi;
        const long E = t.ramification(r - 1);
        const int D = static_cast<int>(t.tower->degree(r));
        if (phi == f_) {
            if (length != 1) throw Error(ErrorKind::Internal, "Newton polygon length mismatch");
            out.push_back({static_cast<int>(E), D});
            return;
        }
        auto coeffs = phi_expansion(f_, phi);
        std::vector<Vertex> pts;
        std::vector<std::optional<std::pair<Rat, Elem>>> vals(coeffs.size());
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].empty()) continue;
            vals[k] = value(t, coeffs[k], r - 1);
            pts.push_back({static_cast<long>(k), vals[k]->first});
        }
        if (pts.front().x != 0) throw Error(ErrorKind::Internal, "phi divides an irreducible polynomial");
        auto hull = lower_hull(pts);

        const auto K = t.tower->field(r);
        ff::PolyRing<ff::TowerLevel> R(K);
        long covered = 0;
        for (size_t h = 0; h + 1 < hull.size(); ++h) {
            const Vertex a = hull[h], b = hull[h + 1];
            const Rat slope = (a.y - b.y) / Rat(b.x - a.x);
            if (slope <= threshold) continue;
            covered += b.x - a.x;

            const long e = Rat(slope * E).get_den().get_si();
            const long deg = (b.x - a.x) / e;
            const Exps step = canon(t, e * slope, r - 1);
            const Exps base = canon(t, a.y, r - 1);
            ff::PolyRing<ff::TowerLevel>::Poly residual;
            for (long i = 0; i <= deg; ++i) {
                const long x = a.x + i * e;
                const auto& v = vals[x];
                if (!v || v->first != a.y - i * e * slope) {
                    residual.push_back(K.zero());
                    continue;
                }
                Exps m = canon(t, v->first, r - 1);
                for (int j = 0; j < r; ++j) m[j] += i * step[j] - base[j];
                residual.push_back(K.mul(v->second, monomial_residue(t, m, r - 1)));
            }
            if (K.is_zero(residual.front()) || K.is_zero(residual.back()))
                throw Error(ErrorKind::Internal, "residual polynomial vanishes at a vertex");
            residual = R.monic(residual);

            for (const auto& [part, mult] : R.squarefree_factorization(residual)) {
                for (const auto& [group, d] : R.distinct_degree(part)) {
                    if (mult == 1) {
                        const long count = (static_cast<long>(group.size()) - 1) / static_cast<long>(d);
                        for (long k = 0; k < count; ++k)
                            out.push_back({static_cast<int>(E * e), D * static_cast<int>(d)});
                        continue;
                    }
                    for (const auto& psi : R.equal_degree(group, d, rng_)) {
                        Type next = t;
                        if (e == 1 && d == 1) {
                            // Refine phi_r: subtract a lift of the root of psi.
                            Elem root = K.neg(psi[0]);
                            next.st[r].phi = zpoly::sub(phi, lift(t, slope, root, r - 1));
                            analyze(next, slope, static_cast<long>(mult), depth + 1, out);
                            continue;
                        }
                        auto& s = next.st[r];
                        s.mu = slope;
                        s.e = e;
                        s.unit.assign(static_cast<size_t>(r) + 1, 0);
                        const Exps u = canon(t, e * slope, r - 1);
                        for (int j = 0; j < r; ++j) s.unit[j] = -u[j];
                        s.unit[r] = e;
                        next.tower = t.tower->extend(psi);
                        Stage up;
                        up.phi = next_phi(next, psi);
                        next.st.push_back(std::move(up));
                        analyze(next, Rat(static_cast<long>(d) * e) * slope, static_cast<long>(mult), depth + 1,
                                out);
                    }
                }
            }
        }
        if (covered != length) throw Error(ErrorKind::Internal, "Newton polygon length mismatch");
    }

    ZPoly f_;
    Int p_;
    ff::FpRing ring_;
    mutable gmp_randclass rng_{gmp_randinit_default};
};

}  // namespace

std::pair<int, int> archimedean_signature(const RatPoly& p) {
    int r1 = sturm_real_roots(p);
    return {r1, (p.degree() - r1) / 2};
}

std::optional<std::vector<LocalFactor>> kummer_dedekind_splitting(const RatPoly& p, const Int& prime) {
    ZPoly f = integral(p);
    ff::FpRing ring{ff::PrimeField(prime)};
    auto fbar = ff::reduce(ring, f);
    if (!ring.is_squarefree(fbar)) return std::nullopt;
    std::vector<LocalFactor> out;
    for (const auto& [group, d] : ring.distinct_degree(fbar)) {
        const size_t count = (group.size() - 1) / d;
        for (size_t k = 0; k < count; ++k) out.push_back({1, static_cast<int>(d)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LocalFactor> newton_polygon_splitting(const RatPoly& p, const Int& prime) {
    TypeSplitter splitter(integral(p), prime);
    auto out = splitter.run();
    int total = 0;
    for (const auto& lf : out) total += lf.degree();
    if (total != p.degree()) throw Error(ErrorKind::Internal, "local degrees do not sum to deg p");
    return out;
}

SplittingType local_splitting(const RatPoly& p, const Place& v) {
    require_irreducible(p);
    SplittingType st;
    st.place = v;
    switch (v.kind()) {
        case Place::Kind::Infinite: {
            auto [r1, r2] = archimedean_signature(p);
            st.real = r1;
            st.complex = r2;
            return st;
        }
        case Place::Kind::Named:
            throw Error(ErrorKind::MissingOverride,
                        "place " + v.to_string() + " is abstract; its splitting data must come from an override");
        case Place::Kind::Finite: break;
    }
    if (auto kd = kummer_dedekind_splitting(p, v.prime()))
        st.factors = std::move(*kd);
    else
        st.factors = newton_polygon_splitting(p, v.prime());
    return st;
}

std::vector<int> local_degrees(const RatPoly& p, const Place& v) { return local_splitting(p, v).local_degrees(); }

}  // namespace csa
