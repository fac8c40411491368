#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csa/place.hpp"
#include "csa/poly.hpp"

namespace csa {

/// A central simple algebra A = Mat_n(D) over the base field, given by the
/// capacity n and the local invariants of D in Q/Z (zero entries omitted).
/// With abstract_base set the base is not Q: places are opaque labels and all
/// splitting data must come from a SplittingOverride.
struct CsaSpec {
    long capacity = 1;
    std::map<Place, Rat> invariants;
    bool abstract_base = false;

    /// deg D: lcm of the invariant denominators.
    long index() const;
    /// deg A = n * deg D.
    long degree() const { return capacity * index(); }
    bool is_division() const { return capacity == 1; }
    friend bool operator==(const CsaSpec&, const CsaSpec&) = default;
};

/// Normalizes invariants into [0, 1), drops zeros and checks the table:
/// InvariantSumNonzero, BadArchimedeanInvariant (inf not in {0, 1/2}),
/// InvalidArgument for capacity < 1, InvalidArgument for labelled places
/// over Q.
CsaSpec validate_csa(const CsaSpec& spec);

/// Externally computed local degrees [K_w : Q_v] for (p, v).
class SplittingOverride {
   public:
    /// Throws DegreeMismatch unless the degrees are positive and sum to deg p.
    void add(const RatPoly& p, const Place& v, std::vector<int> local_degrees);
    const std::vector<int>* find(const RatPoly& p, const Place& v) const;
    bool empty() const noexcept { return table_.empty(); }
    const std::map<std::pair<RatPoly, Place>, std::vector<int>>& entries() const noexcept { return table_; }

   private:
    std::map<std::pair<RatPoly, Place>, std::vector<int>> table_;
};

/// Local degrees of K = Q[t]/(p) over v: the override entry when present,
/// otherwise computed (MissingOverride for abstract bases and labelled
/// places). Linear p needs no data.
std::vector<int> local_degrees_for(const CsaSpec& spec, const RatPoly& p, const Place& v,
                                   const SplittingOverride* override);

/// inv_w = [K_w : Q_v] * inv_v mod 1 for each place w of K over a place v
/// where D ramifies.
struct TensorInvariant {
    Place place;
    int index;  // which w over place, in local_degrees order
    int local_degree;
    Rat value;
    friend bool operator==(const TensorInvariant&, const TensorInvariant&) = default;
};
std::vector<TensorInvariant> tensor_invariants(const CsaSpec& spec, const RatPoly& p,
                                               const SplittingOverride* override = nullptr);

/// (c, d_p): D tensor K = Mat_c(D_p) with deg D_p = d_p, c * d_p = deg D.
struct CapacityOver {
    long capacity;
    long division_degree;
};
CapacityOver capacity_and_division_degree_over(const CsaSpec& spec, const RatPoly& p,
                                               const SplittingOverride* override = nullptr);

/// (a, b)_v in {+1, -1}; a, b nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Places where (a, b)_v may be -1: 2, the primes of a and b, infinity.
std::vector<Place> quaternion_candidate_places(const Rat& a, const Rat& b);

/// Mat_n((a, b / Q)) as a CsaSpec. A split quaternion algebra becomes
/// capacity 2n with an empty table.
CsaSpec quaternion_to_csa(const Rat& a, const Rat& b, long n = 1);

}  // namespace csa
