#pragma once

#include <optional>
#include <vector>

#include "csa/brauer.hpp"
#include "csa/factor.hpp"

namespace csa {

enum class CondB { Pass, Fail, NotEvaluated };

/// Per-factor evidence for the characteristic-polynomial test on p^a | f:
///   (a) a * deg p = n_p * deg D for an integer n_p,
///   (b) deg p divides n_p * c, where D tensor Q[t]/(p) = Mat_c(D_p).
/// c and d_p are only computed when (a) passes.
struct FactorCertificate {
    RatPoly p;
    long a = 0;
    long deg_p = 0;
    std::optional<long> n;
    std::optional<long> c;
    std::optional<long> d_p;
    bool cond_a = false;
    CondB cond_b = CondB::NotEvaluated;

    bool passes() const { return cond_a && cond_b == CondB::Pass; }
};

struct CharPolyVerdict {
    bool answer = false;
    std::vector<FactorCertificate> factors;
    CsaSpec algebra;
};

/// Decides whether the monic f of degree deg A is the reduced characteristic
/// polynomial of some x in A. Throws DegreeMismatch when deg f != n * deg D.
/// Over an abstract base f cannot be factored here; use the factored form.
CharPolyVerdict is_characteristic_polynomial(const CsaSpec& spec, const RatPoly& f,
                                             const SplittingOverride* override = nullptr);
/// Same test on a caller-supplied factorization into distinct monic
/// irreducibles (the only entry point for abstract bases).
CharPolyVerdict is_characteristic_polynomial(const CsaSpec& spec, const Factorization& f,
                                             const SplittingOverride* override = nullptr);

/// One primary component p^a of f with its share n_p of the capacity.
struct PrimaryComponent {
    RatPoly p;
    long a;
    long n;
    CsaSpec algebra;  // Mat_{n_p}(D)
};

/// Splits the test into primary components; throws ReductionObstructed naming
/// the first factor whose a * deg p is not a multiple of deg D.
std::vector<PrimaryComponent> reduce_to_primary(const CsaSpec& spec, const RatPoly& f);

/// Q[t]/(p) embeds in A iff deg p divides n * c(D tensor Q[t]/(p)).
bool embeds(const RatPoly& p, const CsaSpec& spec, const SplittingOverride* override = nullptr);

/// For a division quaternion algebra (a, b) and an irreducible quadratic p:
/// true iff K = Q[t]/(p) stays a field at every ramified place.
bool quaternion_local_global_embed(const Rat& a, const Rat& b, const RatPoly& p);

/// Necessary conditions for (m, f) to be (minimal, characteristic)
/// polynomials of one element of an algebra of degree deg_a: m | f, equal
/// irreducible factor sets, and f = m^(deg_a / deg m) when m is irreducible.
bool minpoly_charpoly_compatible(const RatPoly& m, const RatPoly& f, long deg_a);

}  // namespace csa
