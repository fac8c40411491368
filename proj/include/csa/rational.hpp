#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace csa {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" (optional sign, optional surrounding blanks).
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Representative of r in Q/Z, in [0, 1).
Rat mod_one(const Rat& r);

/// p-adic valuation of a nonzero integer.
long valuation(const Int& z, const Int& p);

/// True if r is the square of a rational; stores the nonnegative root in *root.
bool is_rational_square(const Rat& r, Rat* root = nullptr);

Int lcm(const Int& a, const Int& b);

/// Height of p/q in lowest terms: max(|p|, q).
Int height(const Rat& r);

}  // namespace csa
