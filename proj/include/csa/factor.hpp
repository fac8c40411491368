#pragma once

#include <vector>

#include "csa/poly.hpp"

namespace csa {

struct FactorPower {
    RatPoly poly;  // monic irreducible over Q
    unsigned multiplicity;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Complete factorization over Q. Factors are pairwise distinct and sorted by
/// degree, then lexicographically on coefficients.
struct Factorization {
    std::vector<FactorPower> factors;
    RatPoly expand() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Zassenhaus: squarefree decomposition, factorization modulo the smallest
/// good prime, quadratic Hensel lifting past a Mignotte-type bound, and
/// subset recombination. f must be monic of degree >= 1.
Factorization factor_over_q(const RatPoly& f);

bool is_irreducible(const RatPoly& f);

}  // namespace csa
