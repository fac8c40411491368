#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csa/rational.hpp"

namespace csa {

/// Dense univariate polynomial over Q, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
class RatPoly {
   public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly constant(const Rat& c);
    static RatPoly monomial(const Rat& c, std::size_t k);
    /// The polynomial t.
    static RatPoly t();
    /// t - root.
    static RatPoly linear(const Rat& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of t^i; zero beyond the degree.
    const Rat& coeff(std::size_t i) const noexcept;
    const Rat& leading() const;
    std::span<const Rat> coeffs() const noexcept { return coeffs_; }

    RatPoly monic() const;
    RatPoly derivative() const;
    Rat operator()(const Rat& x) const;
    RatPoly pow(unsigned k) const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rat& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
    friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) noexcept { return a.coeffs_ == b.coeffs_; }
    /// Orders by degree, then lexicographically on ascending coefficients.
    friend std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b) noexcept;

   private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// (q, r) with a = q*b + r and deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
/// Exact quotient; throws Internal if b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& b, const RatPoly& a);

/// Monic gcd; gcd(f, 0) = monic(f). Throws ZeroPolynomial when both vanish.
RatPoly gcd_monic(const RatPoly& a, const RatPoly& b);

struct SquarefreePart {
    RatPoly part;
    unsigned multiplicity;
    friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// Yun decomposition of a monic polynomial: f = prod part^multiplicity with
/// pairwise coprime squarefree parts, listed by increasing multiplicity.
std::vector<SquarefreePart> squarefree_decomposition(const RatPoly& f);

/// Number of distinct real roots, from the Sturm chain of f.
int sturm_real_roots(const RatPoly& f);

/// Resultant by the Euclidean algorithm over Q; a and b nonzero.
Rat resultant(const RatPoly& a, const RatPoly& b);
/// (-1)^(n(n-1)/2) res(f, f') / lc(f), n = deg f >= 1.
Rat discriminant(const RatPoly& f);

/// Product over (poly, multiplicity) pairs.
template <class Range>
RatPoly product_of_powers(const Range& parts) {
    RatPoly out = RatPoly::constant(1);
    for (const auto& [p, m] : parts) out *= p.pow(static_cast<unsigned>(m));
    return out;
}

}  // namespace csa
