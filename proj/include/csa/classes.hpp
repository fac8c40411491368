#pragma once

#include <map>
#include <string>
#include <vector>

#include "csa/brauer.hpp"
#include "csa/charpoly.hpp"

namespace csa {

/// Non-increasing positive parts.
using Partition = std::vector<long>;

long partition_size(const Partition& lam);
/// Non-increasing and positive; the empty partition qualifies.
bool is_partition(const Partition& lam);
/// All partitions of k, lexicographically descending: (k), (k-1, 1), ...
std::vector<Partition> partitions_of(long k);
long partition_count(long k);

/// Conjugacy-class datum of a separable element of A^x: a partition for each
/// monic irreducible p != t dividing its characteristic polynomial.
using ClassInvariant = std::map<RatPoly, Partition>;

/// dim of W_p over D_p for the primary component p^a: a / d_p, cross-checked
/// against n_p * c / deg p. Throws NotACharPoly when p^a fails the test.
long dim_w(const CsaSpec& spec, const RatPoly& p, long a, const SplittingOverride* override = nullptr);

struct ClassTerm {
    RatPoly p;
    long deg_p;
    long size;  // |lambda(p)|
    long d_p;
    long product() const { return deg_p * size * d_p; }
};
struct ClassCheck {
    bool valid = false;
    std::vector<ClassTerm> terms;
    long total = 0;   // sum of deg p * |lambda(p)| * d_p
    long target = 0;  // deg A
};

/// Checks sum deg p * |lambda(p)| * d_p = deg A. Throws KeyIsT for a key
/// equal to t and InvalidClass for non-monic, reducible or empty entries.
ClassCheck validate_class(const CsaSpec& spec, const ClassInvariant& lam, const SplittingOverride* override = nullptr);

/// Every class of A^x with characteristic polynomial f, lexicographic in the
/// per-factor partitions (factor order as in factor_over_q). Empty when f is
/// not a characteristic polynomial. NotInvertible when t | f.
std::vector<ClassInvariant> classes_with_charpoly(const CsaSpec& spec, const RatPoly& f,
                                                  const SplittingOverride* override = nullptr);

/// prod p^(largest part).
RatPoly min_poly_of_class(const ClassInvariant& lam);
/// prod p^(|lambda(p)| * d_p). InvalidClass unless lam is valid for spec.
RatPoly char_poly_of_class(const CsaSpec& spec, const ClassInvariant& lam, const SplittingOverride* override = nullptr);

/// Module structure of one primary component: V_p = W_p^c as a module over
/// Mat_c(D_p), W_p = sum_j D_p[e]/(e^m_j).
struct RcfBlock {
    RatPoly p;
    long n;         // dim of V_p over D
    long c;         // Morita multiplicity
    long d_p;       // deg D_p
    long dim_w;     // dim of W_p over D_p = sum m_j
    long top;       // largest exponent, the multiplicity of p in the minimal polynomial
    std::vector<long> exponents;  // m_1 <= ... <= m_t
};
std::vector<RcfBlock> rcf_structure(const CsaSpec& spec, const ClassInvariant& lam,
                                    const SplittingOverride* override = nullptr);

/// Replaces each partition by all ones of the same size.
ClassInvariant semisimplify_class(const ClassInvariant& lam);

/// True iff some class with characteristic polynomial f has minimal
/// polynomial m. DegreeMismatch when deg f != deg A.
bool realizable_pair(const CsaSpec& spec, const RatPoly& f, const RatPoly& m,
                     const SplittingOverride* override = nullptr);

/// For a division algebra (capacity 1): the candidates p with
/// deg p * d_p = deg D, one conjugacy class of D^x each. NotDivisionAlgebra
/// for capacity > 1, KeyIsT for the candidate t.
std::vector<RatPoly> enumerate_division_classes(const CsaSpec& spec, const std::vector<RatPoly>& candidates,
                                                const SplittingOverride* override = nullptr);

}  // namespace csa
