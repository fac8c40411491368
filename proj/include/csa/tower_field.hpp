#pragma once

// Towers of finite fields F_p = K_0 < K_1 < ... < K_r with
// K_{i+1} = K_i[y]/(psi_i). Elements of K_i are flat coefficient vectors of
// length D_i = [K_i : F_p]; an element of K_i is the constant block of its
// image in K_{i+1}, so embedding upward is zero padding.

#include <memory>
#include <vector>

#include "csa/finite_field.hpp"

namespace csa::ff {

class TowerField;

/// One level of a tower, usable as the coefficient field of PolyRing.
class TowerLevel {
   public:
    using Elem = std::vector<Int>;

    TowerLevel(std::shared_ptr<const TowerField> tower, int level) : tower_(std::move(tower)), level_(level) {}

    int level() const noexcept { return level_; }
    const Int& characteristic() const;
    const Int& order() const;
    unsigned extension_degree() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(const Int& z) const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, long e) const;
    Elem pth_root(const Elem& a) const;
    Elem random(gmp_randclass& rng) const;

   private:
    std::shared_ptr<const TowerField> tower_;
    int level_;
};

class TowerField : public std::enable_shared_from_this<TowerField> {
   public:
    using Elem = std::vector<Int>;
    using Poly = std::vector<Elem>;

    /// K_0 = F_p.
    static std::shared_ptr<const TowerField> prime(const Int& p);
    /// New tower with one more level K_{r+1} = K_r[y]/(modulus); modulus is
    /// monic irreducible over the current top level.
    std::shared_ptr<const TowerField> extend(Poly modulus) const;

    int top() const noexcept { return static_cast<int>(degree_.size()) - 1; }
    unsigned degree(int level) const { return degree_.at(level); }
    const Int& order(int level) const { return order_.at(level); }
    const Int& characteristic() const noexcept { return base_.characteristic(); }
    const PrimeField& base() const noexcept { return base_; }

    TowerLevel field(int level) const { return TowerLevel(shared_from_this(), level); }

    /// Image of an element of K_from in K_to (from <= to).
    Elem embed(const Elem& a, int to) const;
    /// The class of y in K_{level} (level >= 1).
    Elem generator(int level) const;

    // Arithmetic at a given level.
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b, int level) const;
    Elem inv(const Elem& a, int level) const;

    /// Splits an element of K_level (level >= 1) into its coefficients over K_{level-1}.
    std::vector<Elem> blocks(const Elem& a, int level) const;
    Elem from_blocks(const std::vector<Elem>& blocks, int level) const;

   private:
    explicit TowerField(PrimeField base) : base_(std::move(base)) {}
    PrimeField base_;
    std::vector<unsigned> degree_;  // D_i
    std::vector<Int> order_;        // p^{D_i}
    std::vector<Poly> modulus_;     // modulus_[i] defines K_i over K_{i-1}; empty at 0
};

}  // namespace csa::ff
