#include "csa/brauer.hpp"

#include <algorithm>
#include <numeric>

#include "csa/error.hpp"
#include "csa/integer.hpp"
#include "csa/local_split.hpp"
#include "csa/poly_io.hpp"

namespace csa {

long CsaSpec::index() const {
    Int d = 1;
    for (const auto& [v, inv] : invariants) d = lcm(d, mod_one(inv).get_den());
    if (!d.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "index does not fit in a machine integer");
    return d.get_si();
}

CsaSpec validate_csa(const CsaSpec& spec) {
    if (spec.capacity < 1) throw Error(ErrorKind::InvalidArgument, "capacity must be a positive integer");
    CsaSpec out;
    out.capacity = spec.capacity;
    out.abstract_base = spec.abstract_base;
    Rat sum = 0;
    for (const auto& [v, raw] : spec.invariants) {
        if (v.kind() == Place::Kind::Named && !spec.abstract_base)
            throw Error(ErrorKind::InvalidArgument,
                        "place '" + v.label() + "' is a label; labelled places need an abstract base");
        if (v.is_finite() && !is_prime(v.prime())) throw Error(ErrorKind::NonPrimePlace, v.to_string() + " is not prime");
        Rat inv = mod_one(raw);
        if (v.is_infinite() && inv != 0 && inv != Rat(1, 2))
            throw Error(ErrorKind::BadArchimedeanInvariant,
                        "invariant at infinity must be 0 or 1/2, got " + to_string(inv));
        sum += inv;
        if (inv != 0) out.invariants.emplace(v, inv);
    }
    if (mod_one(sum) != 0)
        throw Error(ErrorKind::InvariantSumNonzero, "local invariants sum to " + to_string(mod_one(sum)) + " mod 1");
    return out;
}

void SplittingOverride::add(const RatPoly& p, const Place& v, std::vector<int> local_degrees) {
    int total = 0;
    for (int k : local_degrees) {
        if (k < 1) throw Error(ErrorKind::DegreeMismatch, "local degrees must be positive");
        total += k;
    }
    if (total != p.degree())
        throw Error(ErrorKind::DegreeMismatch, "override local degrees for " + format_poly(p) + " at " +
                                                   v.to_string() + " sum to " + std::to_string(total) +
                                                   ", not deg p = " + std::to_string(p.degree()));
    std::sort(local_degrees.begin(), local_degrees.end());
    table_[{p, v}] = std::move(local_degrees);
}

const std::vector<int>* SplittingOverride::find(const RatPoly& p, const Place& v) const {
    auto it = table_.find({p, v});
    return it == table_.end() ? nullptr : &it->second;
}

std::vector<int> local_degrees_for(const CsaSpec& spec, const RatPoly& p, const Place& v,
                                   const SplittingOverride* override) {
    if (override)
        if (const auto* hit = override->find(p, v)) return *hit;
    if (p.degree() == 1) return {1};
    if (spec.abstract_base)
        throw Error(ErrorKind::MissingOverride,
                    "abstract base: no splitting data for " + format_poly(p) + " at " + v.to_string());
    return local_degrees(p, v);
}

std::vector<TensorInvariant> tensor_invariants(const CsaSpec& spec, const RatPoly& p,
                                               const SplittingOverride* override) {
    std::vector<TensorInvariant> out;
    for (const auto& [v, inv] : spec.invariants) {
        if (inv == 0) continue;
        auto degs = local_degrees_for(spec, p, v, override);
        for (size_t k = 0; k < degs.size(); ++k)
            out.push_back({v, static_cast<int>(k), degs[k], mod_one(Rat(degs[k]) * inv)});
    }
    return out;
}

CapacityOver capacity_and_division_degree_over(const CsaSpec& spec, const RatPoly& p,
                                               const SplittingOverride* override) {
    Int dp = 1;
    for (const auto& ti : tensor_invariants(spec, p, override)) dp = lcm(dp, ti.value.get_den());
    const long d = spec.index();
    const long dps = dp.get_si();
    if (d % dps != 0) throw Error(ErrorKind::Internal, "index of D tensor K does not divide deg D");
    return {d / dps, dps};
}

namespace {

// Square class representative: num * den.
Int integral_class(const Rat& r) { return r.get_num() * r.get_den(); }

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

int parity(const Int& z) { return mpz_odd_p(z.get_mpz_t()) ? 1 : 0; }

// For odd u: eps(u) = (u - 1)/2 and omega(u) = (u^2 - 1)/8, mod 2.
int eps2(const Int& u) {
    Int r = u % 4;
    if (r < 0) r += 4;
    return r == 3 ? 1 : 0;
}
int omega2(const Int& u) {
    Int r = u % 8;
    if (r < 0) r += 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    if (!v.is_finite()) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol needs a rational place");
    const Int& p = v.prime();
    Int A = integral_class(a), B = integral_class(b);
    const long alpha = valuation(A, p), beta = valuation(B, p);
    Int u = A, w = B;
    for (long k = 0; k < alpha; ++k) u /= p;
    for (long k = 0; k < beta; ++k) w /= p;
    int e;
    if (p == 2) {
        e = eps2(u) * eps2(w) + (alpha % 2) * omega2(w) + (beta % 2) * omega2(u);
    } else {
        int s = 1;
        if ((alpha * beta) % 2 != 0 && parity((p - 1) / 2)) s = -s;
        if (beta % 2 != 0) s *= legendre(u, p);
        if (alpha % 2 != 0) s *= legendre(w, p);
        return s;
    }
    return e % 2 ? -1 : 1;
}

std::vector<Place> quaternion_candidate_places(const Rat& a, const Rat& b) {
    std::map<Int, unsigned> primes{{Int(2), 1}};
    for (const Int& z : {Int(a.get_num()), Int(a.get_den()), Int(b.get_num()), Int(b.get_den())}) {
        Int m = abs(z);
        if (m > 1)
            for (const auto& [q, k] : factor_integer(m)) primes[q] += k;
    }
    std::vector<Place> out;
    for (const auto& [q, k] : primes) out.push_back(Place::finite(q));
    out.push_back(Place::infinite());
    return out;
}

CsaSpec quaternion_to_csa(const Rat& a, const Rat& b, long n) {
    if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "quaternion parameters must be nonzero");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "capacity must be a positive integer");
    CsaSpec spec;
    for (const auto& v : quaternion_candidate_places(a, b))
        if (hilbert_symbol(a, b, v) == -1) spec.invariants.emplace(v, Rat(1, 2));
    spec.capacity = spec.invariants.empty() ? 2 * n : n;
    return validate_csa(spec);
}

}  // namespace csa
