#pragma once

#include <map>

#include "csa/rational.hpp"

namespace csa {

/// Baillie-PSW plus 64 Miller-Rabin rounds (GMP); deterministic below 2^64.
bool is_prime(const Int& n);
Int next_prime(const Int& n);

/// Prime factorization of |n| (n != 0) by trial division and Pollard-Brent rho.
std::map<Int, unsigned> factor_integer(const Int& n);

}  // namespace csa
