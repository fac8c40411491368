#pragma once

#include <optional>
#include <vector>

#include "csa/place.hpp"
#include "csa/poly.hpp"

namespace csa {

/// One place w of K over v: ramification index e and residue degree f.
struct LocalFactor {
    int e;
    int f;
    int degree() const noexcept { return e * f; }
    friend auto operator<=>(const LocalFactor&, const LocalFactor&) = default;
};

/// Decomposition of a place v of Q in K = Q[t]/(p). Finite places list one
/// (e, f) pair per place of K above v, sorted; the infinite place records the
/// signature (real embeddings, complex pairs).
struct SplittingType {
    Place place = Place::infinite();
    std::vector<LocalFactor> factors;
    int real = 0;
    int complex = 0;

    /// [K_w : Q_v] for every w | v: e*f at finite places; 1 per real
    /// embedding then 2 per complex pair at infinity.
    std::vector<int> local_degrees() const;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// p monic irreducible over Q (verified when deg p <= 8, trusted above).
/// Finite places use Kummer-Dedekind when p is squarefree modulo v and the
/// Newton-polygon backend otherwise. Abstract places throw MissingOverride.
SplittingType local_splitting(const RatPoly& p, const Place& v);
std::vector<int> local_degrees(const RatPoly& p, const Place& v);

/// (r1, r2) with r1 + 2*r2 = deg p.
std::pair<int, int> archimedean_signature(const RatPoly& p);

/// Tier 1: nullopt when p is not squarefree modulo the prime.
std::optional<std::vector<LocalFactor>> kummer_dedekind_splitting(const RatPoly& p, const Int& prime);
/// Tier 2: Newton polygons of higher order (types over a tower of residue
/// fields). A repeated residual factor either refines phi or opens a new
/// order with a phi of larger degree. Works for every prime, including those
/// Tier 1 handles; throws UnsupportedLocalComputation only if the recursion
/// exceeds its depth cap.
std::vector<LocalFactor> newton_polygon_splitting(const RatPoly& p, const Int& prime);

}  // namespace csa
