#pragma once

// Integer polynomials (ascending coefficients, trimmed) and the arithmetic
// modulo m = p^k used by Hensel lifting and Newton polygons.

#include <utility>
#include <vector>

#include "csa/poly.hpp"

namespace csa::zpoly {

using ZPoly = std::vector<Int>;

void trim(ZPoly& a);
inline int degree(const ZPoly& a) noexcept { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Int& s);
/// Division by a monic polynomial; exact over Z.
std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b);

ZPoly mod(const ZPoly& a, const Int& m);
/// Coefficients in (-m/2, m/2].
ZPoly mod_symmetric(const ZPoly& a, const Int& m);
ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Int& m);
std::pair<ZPoly, ZPoly> divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m);

/// Monic integer polynomial G with Q[t]/(f) = Q[x]/(G), via x = D t where D
/// is the lcm of the coefficient denominators. Returns (G, D).
std::pair<ZPoly, Int> integral_monic(const RatPoly& f);
/// Inverse of integral_monic for a factor h of G: D^{-deg h} h(D t).
RatPoly from_integral_monic(const ZPoly& h, const Int& D);

RatPoly to_rat(const ZPoly& a);

/// Euclidean norm, rounded up.
Int l2_norm_ceil(const ZPoly& a);

/// Minimum p-adic valuation over the coefficients; -1 for the zero polynomial.
long content_valuation(const ZPoly& a, const Int& p);

}  // namespace csa::zpoly
