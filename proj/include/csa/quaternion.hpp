#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "csa/brauer.hpp"
#include "csa/classes.hpp"

namespace csa {

/// w + x i + y j + z k.
struct QuatElt {
    Rat w, x, y, z;
    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    friend bool operator==(const QuatElt&, const QuatElt&) = default;
};

/// The quaternion algebra (a, b / Q): i^2 = a, j^2 = b, ij = -ji = k.
class QuatAlgebra {
   public:
    QuatAlgebra(Rat a, Rat b);

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    bool is_division() const noexcept { return division_; }
    /// Mat_n of this algebra as a CsaSpec.
    CsaSpec spec(long n) const { return quaternion_to_csa(a_, b_, n); }

    QuatElt zero() const { return {0, 0, 0, 0}; }
    QuatElt one() const { return {1, 0, 0, 0}; }
    QuatElt scalar(const Rat& r) const { return {r, 0, 0, 0}; }
    QuatElt add(const QuatElt& p, const QuatElt& q) const;
    QuatElt sub(const QuatElt& p, const QuatElt& q) const;
    QuatElt neg(const QuatElt& p) const;
    QuatElt mul(const QuatElt& p, const QuatElt& q) const;
    QuatElt conj(const QuatElt& p) const;
    /// NotInvertible when the reduced norm vanishes.
    QuatElt inv(const QuatElt& p) const;
    Rat trd(const QuatElt& p) const { return 2 * p.w; }
    Rat nrd(const QuatElt& p) const;

   private:
    Rat a_, b_;
    bool division_;
};

/// Square matrix over a quaternion algebra, row-major.
struct QuatMat {
    long n = 0;
    std::vector<QuatElt> entries;

    QuatMat() = default;
    explicit QuatMat(long size) : n(size), entries(static_cast<size_t>(size * size), QuatElt{0, 0, 0, 0}) {}
    static QuatMat identity(long size);
    static QuatMat scalar(long size, const Rat& r);
    QuatElt& at(long r, long c) { return entries[static_cast<size_t>(r * n + c)]; }
    const QuatElt& at(long r, long c) const { return entries[static_cast<size_t>(r * n + c)]; }
    friend bool operator==(const QuatMat&, const QuatMat&) = default;
};

QuatMat mat_add(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y);
QuatMat mat_sub(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y);
QuatMat mat_mul(const QuatAlgebra& alg, const QuatMat& x, const QuatMat& y);
/// p(M) for a rational polynomial p.
QuatMat mat_poly(const QuatAlgebra& alg, const QuatMat& m, const RatPoly& p);
/// Gauss-Jordan over a division algebra. NotInvertible for singular input,
/// SplitAlgebra over a split algebra.
QuatMat mat_inverse(const QuatAlgebra& alg, const QuatMat& m);
/// Block diagonal assembly.
QuatMat block_diagonal(const std::vector<QuatMat>& blocks);

/// Reduced characteristic polynomial (degree 2n) through the splitting
/// i -> diag(r, -r), j -> [[0, 1], [b, 0]] over Q(r), r^2 = a (roles of a and
/// b swapped when a is a square, rational r when both are).
RatPoly charpoly_quat(const QuatAlgebra& alg, const QuatMat& m);
/// Least-degree monic annihilator, by linear dependence of I, M, M^2, ...
RatPoly minpoly_quat(const QuatAlgebra& alg, const QuatMat& m);
/// Column rank as a map of right D-modules. SplitAlgebra over a split algebra.
long rank_quat(const QuatAlgebra& alg, const QuatMat& m);

struct ElementInvariants {
    RatPoly charpoly;
    RatPoly minpoly;
    ClassInvariant classes;                        // factors other than t
    std::optional<Partition> t_part;               // singular elements only
    std::map<RatPoly, std::vector<long>> kernels;  // dim_D ker p(M)^k, k = 1..
};

/// Reads the partition of each primary component off the kernel staircase
/// dim_D ker p(M)^k = (deg p / c) * sum_j min(k, m_j). Singular M needs
/// allow_singular; its t-component is reported in t_part.
ElementInvariants invariants_of_element(const QuatAlgebra& alg, const QuatMat& m, bool allow_singular = false);

/// Equality of class invariants. ShapeMismatch for different sizes.
bool conjugate_test(const QuatAlgebra& alg, const QuatMat& m1, const QuatMat& m2);

/// Structured candidates (block diagonals of quaternions with prescribed
/// trace and norm and rational companion blocks), then `trials` seeded random
/// matrices; all coordinates have height <= height. A miss proves nothing.
std::optional<QuatMat> search_realization(const QuatAlgebra& alg, long n, const RatPoly& f, long height,
                                          long trials, std::uint64_t seed);

}  // namespace csa
